"""Command-line front end: ``positroid <command> ...``.

Every command reads its inputs from arguments or files, runs one library operation and prints
plain text. Sampling commands print a report whose last line is ``summary: key=value ...`` and
always includes the seed. Exit codes: 0 on success, 1 when the library raises (or a check
fails), 2 on usage errors.
"""
import argparse
import logging
import os
import random
import sys
from typing import Callable, List, Optional, Sequence, Tuple, Union

from PositroidToolkit.affine.core import dimension, from_window, k2_type, length, parse_window, rotate
from PositroidToolkit.affine.Necklaces import format_subset, necklace_of, parse_necklace, perm_of
from PositroidToolkit.affine.Positroids import covers, positroid_of, rank_matrix_of
from PositroidToolkit.config import (DEFAULT_SEED, FIXTURE_DIR, RESIDUE_SAMPLES, SIGN_PROBE_SAMPLES,
                                     TRIANGULATION_SAMPLES)
from PositroidToolkit.errors import InvalidInput, PositroidError
from PositroidToolkit.exact.core import format_scalar, parse_matrix, parse_rat
from PositroidToolkit.forms.core import coordinate_name, form_density, top_cell_identity
from PositroidToolkit.forms.Residues import boundary_parameter, residue_check
from PositroidToolkit.grassmann.core import check_plucker, kernel_point, parse_plucker, perm_of_point
from PositroidToolkit.grassmann.DirectSum import ZERO, direct_sum
from PositroidToolkit.network.core import format_network, format_weight, load_network
from PositroidToolkit.network.Matchings import boundary_measurements
from PositroidToolkit.network.Moves import contract_degree_two, merge_parallel, remove_dipole, remove_leaf, square_move
from PositroidToolkit.network.Trips import is_reduced, perm_of_graph, trip_permutation
from PositroidToolkit.network.core import face_weights
from PositroidToolkit.polytope.Bcfw import bcfw_cells, bcfw_simplices, simplices_of
from PositroidToolkit.polytope.core import (EXCEPTIONAL, ZMap, even_subsets, evenness_sign_probe, sample_positive_Z,
                                            zmap)
from PositroidToolkit.polytope.Triangulations import fan_triangulation, k1_triangulation_check
from PositroidToolkit.reduction.Charts import graph_for, parametrize, random_parameters
from PositroidToolkit.reduction.core import factorize
from PositroidToolkit.relspace.core import format_bicolored, load_bicolored, relation_space
from PositroidToolkit.relspace.Gluing import glue
from PositroidToolkit.relspace.Signs import format_signs, sign_vector
from PositroidToolkit.reports.Certificates import selftest_report, sign_probe_certificate, triangulation_certificate
from PositroidToolkit.reports.core import Report, ReportElement
from PositroidToolkit.symfun.AffineStanley import affine_stanley
from PositroidToolkit.symfun.Cohomology import intersects_exceptional, positroid_class, truncate
from PositroidToolkit.symfun.core import format_schur
from PositroidToolkit.tableaux.core import format_tableau, inverse_promote, parse_tableau, promote
from PositroidToolkit.tableaux.Demazure import character, cyclic_demazure
from PositroidToolkit.tableaux.Theta import theta, theta_inverse
from PositroidToolkit.tl.core import pairings, parse_pairing
from PositroidToolkit.tl.Immanants import immanant, immanants

Output = Union[str, Report]


def _read(path: str) -> str:
    with open(path, "r") as f:
        return f.read()


def _subset(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError as exc:
        raise InvalidInput(f"Not a list of integers: {text!r}") from exc


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


# permutations, necklaces, positroids

def cmd_perm(args, rng) -> Output:
    if args.point:
        return str(perm_of_point(parse_matrix(_read(args.point))))
    if not args.necklace:
        raise InvalidInput("Give a Grassmann necklace or --point FILE")
    return str(perm_of(parse_necklace(args.necklace)))


def cmd_necklace(args, rng) -> Output:
    return str(necklace_of(parse_window(args.perm)))


def cmd_positroid(args, rng) -> Output:
    return str(positroid_of(parse_window(args.perm)))


def cmd_rank_matrix(args, rng) -> Output:
    return rank_matrix_of(parse_window(args.perm)).to_text()


def cmd_covers(args, rng) -> Output:
    return "\n".join(str(g) for g in covers(parse_window(args.perm)))


def cmd_length(args, rng) -> Output:
    f = parse_window(args.perm)
    return f"length: {length(f)}\ndimension: {dimension(f)}"


def cmd_rotate(args, rng) -> Output:
    return str(rotate(parse_window(args.perm), args.times))


def cmd_k2_type(args, rng) -> Output:
    alpha, betas = k2_type(parse_window(args.perm))
    return f"({alpha}; {','.join(str(b) for b in betas)})"


# networks and points

def cmd_measure(args, rng) -> Output:
    return boundary_measurements(load_network(args.network)).to_text()


def cmd_factorize(args, rng) -> Output:
    return format_network(factorize(parse_matrix(_read(args.matrix)))).rstrip("\n")


def cmd_parametrize(args, rng) -> Output:
    chart = graph_for(parse_window(args.perm))
    lines = []
    if args.values:
        values = [parse_rat(t) for t in args.values.split(",")]
    else:
        values = random_parameters(rng, chart.dimension)
        lines.append(f"seed: {args.seed}")
    m = parametrize(chart, values)
    lines += [f"{t} = {format_scalar(v)}" for t, v in zip(chart.params, values)]
    lines.append(m.to_text())
    return "\n".join(lines)


def cmd_kernel(args, rng) -> Output:
    return kernel_point(parse_plucker(_read(args.point))).to_text()


def cmd_direct_sum(args, rng) -> Output:
    result = direct_sum(parse_plucker(_read(args.first)), parse_plucker(_read(args.second)))
    return "Zero" if result is ZERO else result.to_text()


def cmd_trips(args, rng) -> Output:
    network = load_network(args.network)
    lines = [f"{i} -> {j}" for i, j in sorted(trip_permutation(network).items())]
    lines.append(f"permutation: {perm_of_graph(network)}")
    lines.append(f"reduced: {_yes(is_reduced(network))}")
    return "\n".join(lines)


def cmd_faces(args, rng) -> Output:
    network = load_network(args.network)
    lines = []
    for index, (face, y) in enumerate(face_weights(network), start=1):
        walk = " ".join(dart.tail for dart in face)
        lines.append(f"face {index}: {walk}  y = {format_weight(network, y)}")
    return "\n".join(lines)


def cmd_move(args, rng) -> Output:
    network = load_network(args.network)
    if args.square:
        result = square_move(network, args.square.split(","))
    elif args.contract:
        result = contract_degree_two(network, args.contract)
    elif args.leaf:
        result = remove_leaf(network, args.leaf)
    elif args.dipole:
        result = remove_dipole(network, args.dipole)
    else:
        e, f = args.parallel.split(",")
        result = merge_parallel(network, e, f)
    return format_network(result).rstrip("\n")


# symmetric functions and classes

def cmd_stanley(args, rng) -> Output:
    return format_schur(affine_stanley(parse_window(args.perm)))


def cmd_class(args, rng) -> Output:
    return str(positroid_class(parse_window(args.perm)))


def cmd_truncate(args, rng) -> Output:
    f = parse_window(args.perm)
    truncated = truncate(positroid_class(f), args.r)
    return "\n".join([f"tau_{args.r}: {truncated}",
                      f"independent: {_yes(not truncated.is_zero())}",
                      f"meets exceptional locus: {_yes(intersects_exceptional(f, args.r))}",
                      "degree d_f: unknown"])


# tableaux and Temperley-Lieb

def cmd_promote(args, rng) -> Output:
    tableau = parse_tableau(_read(args.tableau), args.n)
    step = inverse_promote if args.inverse else promote
    for _ in range(args.times):
        tableau = step(tableau)
    return format_tableau(tableau)


def cmd_crystal(args, rng) -> Output:
    crystal = cyclic_demazure(parse_window(args.perm), args.d)
    blocks = [format_tableau(t) for t in crystal]
    blocks.append(f"{len(crystal)} tableaux\ncharacter: {character(crystal)}")
    return "\n\n".join(blocks)


def cmd_immanant(args, rng) -> Output:
    network = load_network(args.network)
    if args.pairing:
        return format_weight(network, immanant(network, parse_pairing(args.pairing, network.n)))
    found = immanants(network)
    return "\n".join(f"{p}  =  {format_weight(network, found[p])}" for p in sorted(found))


def cmd_pairings(args, rng) -> Output:
    found = pairings(args.k, args.n)
    return "\n".join([str(p) for p in found] + [f"{len(found)} pairings"])


def cmd_theta(args, rng) -> Output:
    if args.pairing:
        return format_tableau(theta(parse_pairing(args.pairing, args.n)))
    return str(theta_inverse(parse_tableau(_read(args.tableau), args.n)))


# relation spaces

def cmd_relspace(args, rng) -> Output:
    rel = relation_space(load_bicolored(args.network))
    if not rel.defined:
        return "undefined"
    return rel.to_text() + "\n\n" + rel.pluckers().to_text()


def cmd_signs(args, rng) -> Output:
    signs = sign_vector(load_network(args.network), rng)
    return f"seed: {args.seed}\n" + format_signs(signs).rstrip("\n")


def cmd_glue(args, rng) -> Output:
    glued = glue(load_bicolored(args.network), args.a, args.b)
    return format_bicolored(glued) + "relation space:\n" + relation_space(glued).to_text()


# forms

def cmd_form_density(args, rng) -> Output:
    f = parse_window(args.perm)
    form = form_density(f, _subset(args.chart) if args.chart else None)
    return "\n".join([f"chart: {format_subset(form.chart, f.n)}",
                      f"coordinates: {' '.join(coordinate_name(c) for c in form.coords)}",
                      f"parameters: {' '.join(form.field.names)}",
                      f"density: {form.to_text()}"])


def cmd_residue_check(args, rng) -> Output:
    f, g = parse_window(args.perm), parse_window(args.boundary)
    index = boundary_parameter(f, g)
    holds = residue_check(f, g, args.samples, rng)
    report = Report(f"Residue of the form of {f} along {g}",
                    {"seed": args.seed, "samples": args.samples, "parameter": index, "ok": holds})
    verdict = "agrees" if holds else "does not agree"
    report.section("Result").add_content(ReportElement.paragraph(
        f"The residue at bridge weight {index} {verdict} with the form of {g} up to sign."))
    return report


# amplituhedron

def cmd_bcfw(args, rng) -> Output:
    cells = sorted(bcfw_cells(args.k, args.n))
    lines = []
    for f in cells:
        if args.k == 1:
            lines.append(f"{f}  {{{','.join(str(i) for i in simplices_of([f])[0])}}}")
        else:
            lines.append(str(f))
    lines.append(f"{len(cells)} cells")
    return "\n".join(lines)


def cmd_triangulate_check(args, rng) -> Output:
    if args.fan:
        simplices = fan_triangulation(args.n, args.r, args.fan)
    elif args.r == 5:
        simplices = simplices_of(bcfw_cells(1, args.n))
    else:
        raise InvalidInput(f"BCFW cells give simplices only for r = 5; use --fan for r = {args.r}")
    Z = sample_positive_Z(args.n, args.r, rng)
    check = k1_triangulation_check(Z, simplices, args.samples, rng)
    return triangulation_certificate(check, simplices, args.n, args.r, args.seed)


def cmd_sign_probe(args, rng) -> Output:
    m = args.r - args.k
    if args.subsets:
        subsets = [_subset(part) for part in args.subsets.split(";")]
    else:
        subsets = even_subsets(args.n, m)
    Z = sample_positive_Z(args.n, args.r, rng, k=args.k)
    probes = [evenness_sign_probe(Z, I, args.k, args.samples, rng) for I in subsets]
    return sign_probe_certificate(probes, args.n, args.r, args.k, args.seed)


def cmd_z_map(args, rng) -> Output:
    image = zmap(parse_matrix(_read(args.point)), ZMap(parse_matrix(_read(args.Z))))
    return "Exceptional" if image is EXCEPTIONAL else image.to_text()


# self test

def selftest_checks(seed: int) -> List[Tuple[str, Callable[[], bool]]]:
    """Worked examples and sampling certificates, each a named zero-argument check."""
    square = os.path.join(FIXTURE_DIR, "square.net")

    def triangulation():
        rng = random.Random(seed)
        Z = sample_positive_Z(6, 5, rng)
        return k1_triangulation_check(Z, simplices_of(bcfw_cells(1, 6)), TRIANGULATION_SAMPLES, rng).ok

    def signs():
        rng = random.Random(seed)
        Z = sample_positive_Z(8, 6, rng, k=2)
        return all(evenness_sign_probe(Z, I, 2, SIGN_PROBE_SAMPLES // 10, rng).fixed_sign
                   for I in ((1, 2, 3, 4), (2, 3, 6, 7)))

    return [
        ("necklace of [2,4,6,5,7,9]", lambda: str(necklace_of(from_window([2, 4, 6, 5, 7, 9])))
         == "(13,23,34,46,56,16)"),
        ("affine Stanley of [5,2,7,4]", lambda: format_schur(affine_stanley(from_window([5, 2, 7, 4])))
         == "s[2,2] + s[2,1,1] - s[1,1,1,1]"),
        ("square network measurement", lambda: check_plucker(boundary_measurements(load_network(square)))),
        ("square network trips", lambda: perm_of_graph(load_network(square)) == from_window([3, 4, 5, 6])),
        ("top cell form of Gr(2,4)", lambda: top_cell_identity(2, 4)),
        ("BCFW cells of Gr(1,n)", lambda: all(simplices_of(bcfw_cells(1, n)) == bcfw_simplices(n)
                                               for n in (6, 7, 8))),
        ("triangulation of the cyclic polytope", triangulation),
        ("signs of even subsets", signs),
    ]


def cmd_selftest(args, rng) -> Output:
    return selftest_report(selftest_checks(args.seed), args.seed)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="positroid", description="Positroid varieties, networks and amplituhedra.")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for every random choice")
    parser.add_argument("--verbose", action="store_true", help="log progress")
    parser.add_argument("--debug", action="store_true", help="log every step")
    parser.add_argument("--html", metavar="PATH", help="also write the output as HTML")
    sub = parser.add_subparsers(dest="command")

    def command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    def perm_command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = command(name, handler, help_text)
        p.add_argument("perm", help='window such as "[2,4,6,5,7,9]"')
        return p

    p = command("perm", cmd_perm, "bounded affine permutation of a necklace or a point")
    p.add_argument("necklace", nargs="?", help='necklace such as "(13,23,34,46,56,16)"')
    p.add_argument("--point", metavar="FILE", help="k x n matrix file")
    perm_command("necklace", cmd_necklace, "Grassmann necklace")
    perm_command("positroid", cmd_positroid, "bases of the positroid")
    perm_command("rank-matrix", cmd_rank_matrix, "cyclic rank matrix")
    perm_command("covers", cmd_covers, "codimension-one boundary cells")
    perm_command("length", cmd_length, "length and dimension")
    perm_command("rotate", cmd_rotate, "cyclic rotation").add_argument("--times", type=int, default=1)
    perm_command("k2-type", cmd_k2_type, "type of a k = 2 permutation")

    command("measure", cmd_measure, "boundary measurements of a network").add_argument("network")
    command("factorize", cmd_factorize, "network of a totally nonnegative point").add_argument("matrix")
    p = perm_command("parametrize", cmd_parametrize, "point of a cell from bridge weights")
    p.add_argument("--values", help="comma separated weights; random when omitted")
    command("kernel", cmd_kernel, "Plücker coordinates of the kernel").add_argument("point")
    p = command("direct-sum", cmd_direct_sum, "span of two points")
    p.add_argument("first")
    p.add_argument("second")
    command("trips", cmd_trips, "trip permutation of a network").add_argument("network")
    command("faces", cmd_faces, "faces and face weights").add_argument("network")
    p = command("move", cmd_move, "apply one local move")
    p.add_argument("network")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--square", metavar="B1,W2,B2,W1")
    group.add_argument("--contract", metavar="VERTEX")
    group.add_argument("--leaf", metavar="VERTEX")
    group.add_argument("--dipole", metavar="EDGE")
    group.add_argument("--parallel", metavar="E,F")

    perm_command("stanley", cmd_stanley, "affine Stanley symmetric function")
    perm_command("class", cmd_class, "cohomology class of the positroid variety")
    perm_command("truncate", cmd_truncate, "truncated class for a projection to Gr(k, r)").add_argument(
        "--r", type=int, required=True)

    p = command("promote", cmd_promote, "promotion of a rectangular tableau")
    p.add_argument("tableau")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--times", type=int, default=1)
    p.add_argument("--inverse", action="store_true")
    perm_command("crystal", cmd_crystal, "cyclic Demazure crystal").add_argument("--d", type=int, default=2)
    p = command("immanant", cmd_immanant, "Temperley-Lieb immanants of a network")
    p.add_argument("network")
    p.add_argument("--pairing", help='"arcs: (1,4)(2,3); T: {}"')
    p = command("pairings", cmd_pairings, "partial non-crossing pairings")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p = command("theta", cmd_theta, "pairing to two-column tableau and back")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pairing")
    group.add_argument("--tableau", metavar="FILE")

    command("relspace", cmd_relspace, "relation space of a bicolored network").add_argument("network")
    command("signs", cmd_signs, "edge signs relating relation spaces and measurements").add_argument("network")
    p = command("glue", cmd_glue, "glue two boundary vertices")
    p.add_argument("network")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    perm_command("form-density", cmd_form_density, "canonical form in a chart").add_argument(
        "--chart", help="subset I of the chart, e.g. 1,2")
    p = perm_command("residue-check", cmd_residue_check, "residue along a boundary cell")
    p.add_argument("boundary")
    p.add_argument("--samples", type=int, default=RESIDUE_SAMPLES)

    p = command("bcfw", cmd_bcfw, "BCFW cells")
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p = command("triangulate-check", cmd_triangulate_check, "sampling check of a k = 1 triangulation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=5)
    p.add_argument("--fan", type=int, metavar="APEX", help="check the fan from APEX instead of the BCFW cells")
    p.add_argument("--samples", type=int, default=TRIANGULATION_SAMPLES)
    p = command("sign-probe", cmd_sign_probe, "signs of Δ(Y, Z_I) over sampled points")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--subsets", help='"1,2,3,4;2,3,6,7"; all even subsets when omitted')
    p.add_argument("--samples", type=int, default=SIGN_PROBE_SAMPLES)
    p = command("z-map", cmd_z_map, "image of a point under Z")
    p.add_argument("point")
    p.add_argument("Z")

    command("selftest", cmd_selftest, "run the worked examples and sampling certificates")
    return parser


def as_report(command: str, output: Output) -> Report:
    if isinstance(output, Report):
        return output
    report = Report(f"positroid {command}")
    body = "\n".join("    " + line for line in output.splitlines())
    report.section("Output").add_content(ReportElement.paragraph(body))
    return report


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.debug:
        logging.basicConfig(level=logging.DEBUG)
    elif args.verbose:
        logging.basicConfig(level=logging.INFO)
    if not getattr(args, "handler", None):
        parser.print_usage(sys.stderr)
        return 2
    rng = random.Random(args.seed)
    try:
        output = args.handler(args, rng)
        if args.html:
            as_report(args.command, output).save_as_html(args.html)
    except (PositroidError, OSError) as exc:
        print(f"error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return 1
    if isinstance(output, Report):
        print(output.to_text(), end="")
        return 0 if output.summary.get("ok", True) else 1
    print(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
