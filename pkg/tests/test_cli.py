import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from coarseness.cli import main
from coarseness.io import ReportRecord, read_instance

SQUARE = "# square\n0 0 R\n1 0 B\n0 1 B\n1 1 R\n"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def square_file(tmp_path):
    path = tmp_path / "square.txt"
    path.write_text(SQUARE)
    return path


@pytest.fixture
def grid_file(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "grid", 9, "--seed", 7)
    assert code == 0
    path = tmp_path / "grid.txt"
    path.write_text(out)
    return path


def report(out):
    return json.loads(out)


def test_gen_is_reproducible(capsys):
    _, a, _ = run(capsys, "gen", "grid", 16, "--seed", 7)
    _, b, _ = run(capsys, "gen", "grid", 16, "--seed", 7)
    assert a == b and read_instance(a).n == 16
    _, mono, _ = run(capsys, "gen", "convex-gon", 6, "--coloring", "red")
    assert read_instance(mono).r == 6


def test_basic_reports(capsys, square_file):
    d = report(run(capsys, "disc", square_file, "--members", "0,3")[1])
    assert (d["n"], d["r"], d["b"], d["disc"], d["details"]["members_disc"]) == (4, 2, 2, 0, 2)
    assert report(run(capsys, "d1", square_file)[1])["d1"] == 1
    d = report(run(capsys, "d2", square_file)[1])
    assert d["d2"] == 2 and d["details"]["island"]["members"] in ([0, 3], [1, 2])
    assert report(run(capsys, "dk", square_file, "--k", 3)[1])["details"]["dk"] == 2


def test_exact_and_approx(capsys, square_file, tmp_path):
    d = report(run(capsys, "coarse-exact", square_file)[1])
    assert d["details"]["coarseness"] == 1
    code, out, _ = run(capsys, "coarse-approx", square_file)
    d = report(out)
    assert code == 0 and d["lower"] == {"num": 1, "den": 2} and d["upper"] == 32
    blocks = tmp_path / "witness.json"
    blocks.write_text(out)
    code, out, _ = run(capsys, "check-partition", square_file, "--blocks", blocks)
    assert code == 0 and report(out)["details"]["valid"]


def test_check_partition_rejects_crossing_blocks(capsys, square_file, tmp_path):
    blocks = tmp_path / "blocks.txt"
    blocks.write_text("0 3\n1 2\n")
    code, out, _ = run(capsys, "check-partition", square_file, "--blocks", blocks)
    d = report(out)
    assert code == 2 and not d["details"]["valid"]
    assert d["details"]["violation"] == "hulls-intersect"


def test_color_and_shatter(capsys, grid_file, tmp_path):
    out_file = tmp_path / "colored.txt"
    d = report(run(capsys, "color", grid_file, "--mode", "minimize", "--seed", 3, "--out", out_file)[1])
    assert d["upper"] == 16 * d["d2"]
    assert "".join("R" if c == 1 else "B" for c in read_instance(out_file.read_text()).colors) \
        == d["details"]["colors"]
    d = report(run(capsys, "shatter", grid_file, "--k", 2, "--m", 5, "--seed", 1)[1])
    assert d["details"]["within_bound"] and d["details"]["m"] == 5


def test_svg_output_is_well_formed(capsys, square_file, tmp_path):
    for show in ("none", "d2", "approx", "exact"):
        out = tmp_path / f"{show}.svg"
        code, _, _ = run(capsys, "svg", square_file, "--out", out, "--show", show)
        assert code == 0
        assert ET.parse(out).getroot().tag.endswith("svg")


def test_experiment_writes_csv_and_plot(capsys, tmp_path):
    csv_path, svg_path = tmp_path / "rows.csv", tmp_path / "plot.svg"
    code, out, _ = run(capsys, "experiment", "scaling", "--sizes", 16, 24, "--seeds", 1,
                       "--csv", csv_path, "--svg", svg_path)
    assert code == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0].startswith("n,seed,kind,d1,d2,certified_upper") and len(lines) == 7
    assert len(report(out)["details"]["rows"]) == 6
    ET.parse(svg_path)


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 0 R\n1 1 B\n2 2 R\n")
    code, _, err = run(capsys, "d1", bad)
    assert code == 2 and "collinear" in err
    bad.write_text("0 0 R\nfoo\n")
    assert run(capsys, "d2", bad)[0] == 2
    _, big, _ = run(capsys, "gen", "grid", 20)
    big_file = tmp_path / "big.txt"
    big_file.write_text(big)
    code, _, err = run(capsys, "coarse-exact", big_file)
    assert code == 3 and "budget" in err
    assert run(capsys, "dk", big_file, "--k", 5, "--budget", 1000)[0] == 3


def test_stdin_is_read(square_file):
    out = subprocess.run([sys.executable, "-m", "coarseness", "d1"], input=SQUARE,
                         capture_output=True, text=True, check=True)
    assert ReportRecord.from_json(out.stdout).d1 == 1


COMMANDS = [
    ["gen", "random-disc", 12, "--seed", 5],
    ["disc", "{f}"],
    ["d1", "{f}"],
    ["d2", "{f}"],
    ["dk", "{f}", "--k", 2],
    ["coarse-exact", "{f}"],
    ["coarse-approx", "{f}"],
    ["color", "{f}", "--mode", "random", "--seed", 4],
    ["color", "{f}", "--mode", "balanced", "--seed", 4],
    ["color", "{f}", "--mode", "minimize", "--seed", 4, "--restarts", 3],
    ["check-partition", "{f}", "--blocks", "{b}"],
    ["shatter", "{f}", "--k", 2, "--m", 6, "--seed", 2],
    ["experiment", "scaling", "--sizes", 12, "--seeds", 1, 2],
    ["svg", "{f}", "--out", "{s}", "--show", "approx"],
]


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: "-".join(map(str, a[:3])))
def test_commands_are_byte_reproducible(capsys, grid_file, tmp_path, argv):
    blocks = tmp_path / "blocks.txt"
    blocks.write_text("\n".join(str(i) for i in range(9)) + "\n")
    outputs = []
    for workers in (1, 1, 4):
        svg = tmp_path / f"out{len(outputs)}.svg"
        args = [str(a).format(f=grid_file, b=blocks, s=svg) for a in argv]
        if args[0] != "gen":
            args += ["--no-timing", "--workers", str(workers)]
        code, out, _ = run(capsys, *args)
        assert code == 0
        if args[0] == "svg":
            out = out.replace(str(svg), "") + svg.read_text()
        outputs.append(out)
    assert outputs[0] == outputs[1] == outputs[2]
