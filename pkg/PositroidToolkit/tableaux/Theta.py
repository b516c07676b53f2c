from PositroidToolkit.errors import InvalidPairing, MismatchedShape
from PositroidToolkit.tableaux.core import RectTableau, tableau_of_columns
from PositroidToolkit.tl.core import NonCrossingPairing


def theta(pairing: NonCrossingPairing) -> RectTableau:
    """Two-column tableau with columns I_1, I_2: I_1 ∩ I_2 = T, and each arc (a < b) puts a in I_1 and b in I_2."""
    first = set(pairing.T) | {a for a, _ in pairing.arcs}
    second = set(pairing.T) | {b for _, b in pairing.arcs}
    if len(first) != pairing.k or len(second) != pairing.k:
        raise InvalidPairing(f"{pairing} does not give two {pairing.k}-subsets")
    return tableau_of_columns([first, second], pairing.n)


def theta_inverse(tableau: RectTableau) -> NonCrossingPairing:
    """Matches I_1 - I_2 against I_2 - I_1 like parentheses read from 1 to n."""
    if tableau.d != 2:
        raise MismatchedShape(f"theta is defined on two-column tableaux, got {tableau.d} columns")
    first, second = (set(c) for c in tableau.columns())
    T = first & second
    arcs, opened = [], []
    for i in range(1, tableau.n + 1):
        if i in first - second:
            opened.append(i)
        elif i in second - first:
            if not opened:
                raise InvalidPairing(f"{i} closes no arc")
            arcs.append((opened.pop(), i))
    if opened:
        raise InvalidPairing(f"Points {opened} open no arc")
    return NonCrossingPairing(tableau.n, arcs, T)
