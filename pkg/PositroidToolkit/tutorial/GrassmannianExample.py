import os
import random

from PositroidToolkit.affine.core import parse_window
from PositroidToolkit.affine.Necklaces import necklace_of
from PositroidToolkit.config import DEFAULT_SEED, FIXTURE_DIR
from PositroidToolkit.network.core import format_network, load_network
from PositroidToolkit.network.Matchings import boundary_measurements
from PositroidToolkit.network.Trips import perm_of_graph
from PositroidToolkit.reduction.Charts import graph_for, parametrize, random_parameters
from PositroidToolkit.reduction.core import factorize
from PositroidToolkit.reports.core import Report, ReportElement
from PositroidToolkit.symfun.AffineStanley import affine_stanley
from PositroidToolkit.symfun.Cohomology import positroid_class
from PositroidToolkit.symfun.core import format_schur
from PositroidToolkit.tableaux.Demazure import character, cyclic_demazure

rng = random.Random(DEFAULT_SEED)

# Boundary measurements of the square network for the top cell of Gr(2,4)
square = load_network(os.path.join(FIXTURE_DIR, "square.net"))
print(boundary_measurements(square).to_text())

# A random point of the positroid cell of f, and a network that recovers it
f = parse_window("[2,4,6,5,7,9]")
chart = graph_for(f)
X = parametrize(chart, random_parameters(rng, chart.dimension))
network = factorize(X)
print(format_network(network))
print(f"trip permutation: {perm_of_graph(network)}")

# Necklace, cohomology class and Demazure character of the same cell
report = Report(f"The positroid variety of {f}", {"seed": DEFAULT_SEED})
report.section("Cell").add_content(ReportElement.table(
    ["necklace", "dimension", "affine Stanley", "class"],
    [[str(necklace_of(f)), chart.dimension, format_schur(affine_stanley(f)), str(positroid_class(f))]]))
crystal = cyclic_demazure(f, 2)
report.section("Cyclic Demazure crystal, d = 2").add_content(
    ReportElement.paragraph(f"{len(crystal)} tableaux with character {character(crystal)}"))
print(report.to_text())

os.makedirs("PositroidToolkit/outputs", exist_ok=True)
report.save_as_html("PositroidToolkit/outputs/grassmann_example.html")
