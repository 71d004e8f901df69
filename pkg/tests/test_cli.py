import random
import subprocess
import sys

import pytest

from multcode import cli
from multcode.field import PrimeField
from multcode.mcode import CodeParams, Grid, encode, zero_word
from multcode.poly import MultiPoly, random_poly

GF13 = PrimeField(13)
PR = CodeParams(2, 5, Grid.cube(GF13, range(6), 2))


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def poly_file(tmp_path):
    P = random_poly(GF13, 2, 5, random.Random(11))
    path = tmp_path / "P.txt"
    path.write_text(cli.write_poly(P))
    return P, path


def encode_to(tmp_path, poly_path, capsys, name="w.txt"):
    out = tmp_path / name
    code, _, _ = run(["encode", "--prime", "13", "--m", "2", "--s", "2", "--d", "5",
                      "--sets", "range:6", "--poly", str(poly_path), "--out", str(out)], capsys)
    assert code == 0
    return out


def test_zero_polynomial_encodes_to_zero_records(tmp_path, capsys):
    out = tmp_path / "z.txt"
    assert run(["encode", "--prime", "13", "--m", "2", "--s", "2", "--d", "5",
                "--sets", "0,1,2,3,4,5", "--out", str(out)], capsys)[0] == 0
    lines = out.read_text().splitlines()
    assert lines[:7] == ["mword/1", "p 13", "m 2", "s 2", "d 5", "T 0 1 2 3 4 5", "T 0 1 2 3 4 5"]
    assert lines[7:] == ["0 0 0"] * 36


def test_encode_then_decode_returns_coefficients(tmp_path, capsys, poly_file):
    P, path = poly_file
    w = encode_to(tmp_path, path, capsys)
    code, out, _ = run(["decode", "--in", str(w)], capsys)
    assert code == 0
    assert cli.read_poly(out, GF13, 2) == P
    assert out == path.read_text()


def test_format_round_trip_is_byte_exact():
    w = encode(random_poly(GF13, 2, 5, random.Random(1)), PR)
    text = cli.write_mword(w)
    assert cli.read_mword(text) == w
    assert cli.write_mword(cli.read_mword(text)) == text
    assert "\r" not in text and text.endswith("\n")


@pytest.mark.parametrize("mutate", [
    lambda t: t.replace("mword/1", "mword/2"),
    lambda t: t.replace("p 13", "p 12"),
    lambda t: t.replace("d 5", "d x"),
    lambda t: t.rsplit("\n", 2)[0] + "\n",
    lambda t: t + "0 0 0\n",
    lambda t: t.replace("\n0 0 0\n", "\n0 0\n", 1),
    lambda t: t.replace("\n0 0 0\n", "\n0 0 13\n", 1),
    lambda t: t.replace("T 0 1 2 3 4 5\n", "T 0 1 2 3 4 4\n", 1),
])
def test_malformed_word_files_are_rejected(mutate):
    text = cli.write_mword(zero_word(PR))
    with pytest.raises(ValueError):
        cli.read_mword(mutate(text))


def test_bad_input_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("not a word\n")
    code, _, err = run(["decode", "--in", str(bad)], capsys)
    assert code == 2 and "error" in err
    assert run(["decode", "--in", str(tmp_path / "missing.txt")], capsys)[0] == 2
    assert run(["encode", "--prime", "12", "--m", "2", "--s", "2", "--d", "5",
                "--sets", "range:6"], capsys)[0] == 2


def test_corrupt_budget_zero_is_identity(tmp_path, capsys, poly_file):
    _, path = poly_file
    w = encode_to(tmp_path, path, capsys)
    out = tmp_path / "c.txt"
    code, _, err = run(["corrupt", "--in", str(w), "--out", str(out), "--budget", "0"], capsys)
    assert code == 0 and "delta_mult 0" in err
    assert out.read_bytes() == w.read_bytes()


def test_corrupt_is_seeded(tmp_path, capsys, poly_file):
    _, path = poly_file
    w = encode_to(tmp_path, path, capsys)
    outs = []
    for name in ("a.txt", "b.txt"):
        out = tmp_path / name
        run(["corrupt", "--in", str(w), "--out", str(out), "--seed", "5", "--budget", "20"], capsys)
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


@pytest.mark.parametrize("extra", [["--budget", "20"], ["--budget", "20", "--mode", "lowdeg", "--cutoff", "1"],
                                   ["--symbols", "10"]])
def test_corrupt_then_decode(tmp_path, capsys, poly_file, extra):
    P, path = poly_file
    w = encode_to(tmp_path, path, capsys)
    for seed in range(3):
        out = tmp_path / f"c{seed}.txt"
        code, _, err = run(["corrupt", "--in", str(w), "--out", str(out), "--seed", str(seed)] + extra, capsys)
        assert code == 0 and "delta_mult 20" in err
        code, dec, _ = run(["decode", "--in", str(out)], capsys)
        assert code == 0 and cli.read_poly(dec, GF13, 2) == P


def test_unreachable_budget_exit_code(tmp_path, capsys, poly_file):
    _, path = poly_file
    w = encode_to(tmp_path, path, capsys)
    assert run(["corrupt", "--in", str(w), "--budget", "21"], capsys)[0] == 2
    assert run(["corrupt", "--in", str(w), "--budget", "100", "--mode", "lowdeg"], capsys)[0] == 2


def test_overcorrupted_word_fails_with_exit_one(tmp_path, capsys):
    from multcode import channel, oracle
    from multcode.mcode import within_radius
    F3 = PrimeField(3)
    pr = CodeParams(2, 2, Grid.cube(F3, range(3), 2))
    space = oracle.PolySpace(pr)
    rng = random.Random(3)
    P = random_poly(F3, 2, 2, rng)
    while True:
        f = channel.corrupt_random(encode(P, pr), 9, rng)
        if not within_radius(oracle.nearest_codeword(f, space).dist, pr):
            break
    path = tmp_path / "far.txt"
    path.write_text(cli.write_mword(f))
    code, out, err = run(["decode", "--in", str(path)], capsys)
    assert code == 1 and out == "" and "fail" in err


def test_oracle_command(tmp_path, capsys):
    F3 = PrimeField(3)
    pr = CodeParams(2, 2, Grid.cube(F3, range(3), 2))
    P = MultiPoly(F3, 2, {(1, 1): 2, (0, 0): 1})
    path = tmp_path / "w.txt"
    path.write_text(cli.write_mword(encode(P, pr)))
    code, out, _ = run(["oracle", "--in", str(path)], capsys)
    assert code == 0
    assert cli.read_poly(out, F3, 2) == P
    assert "distance 0  unique true" in out


def test_gmd_command(capsys):
    code, out, _ = run(["gmd", "--msg", "2", "--flip", "0,4"], capsys)
    assert code == 0 and out.strip().endswith("decoded 2")
    code, out, _ = run(["gmd", "--msg", "2", "--flip", "0,1,2,3,4"], capsys)
    assert code in (0, 1)


def test_szsweep_command(capsys):
    code, out, _ = run(["szsweep", "--trials", "200"], capsys)
    assert code == 0 and "violations 0" in out
    low = int(out.split("min delta_mult ")[1].split()[0])
    assert low >= 42


def test_bench_command(capsys):
    code, out, _ = run(["bench", "--trials", "2"], capsys)
    assert code == 0 and "2/2 recovered" in out


def test_module_entry_point(tmp_path):
    out = tmp_path / "z.txt"
    res = subprocess.run([sys.executable, "-m", "multcode", "encode", "--prime", "5", "--m", "2",
                          "--s", "1", "--d", "1", "--sets", "0,1;2,3", "--out", str(out)])
    assert res.returncode == 0
    assert out.read_text().splitlines()[5:7] == ["T 0 1", "T 2 3"]
    res = subprocess.run([sys.executable, "-m", "multcode", "decode", "--in", str(tmp_path / "nope")],
                         capture_output=True)
    assert res.returncode == 2
