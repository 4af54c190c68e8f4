import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from germlab.catalog import (CatalogError, default_nonsimple_entries,
                             default_simple_entries, nonsimple_entry, simple_entry)
from germlab.cli import main
from germlab.germfile import (GermFileError, format_germ_file, load_germ_file,
                              parse_germ_file)

ROOT = Path(__file__).resolve().parent.parent
GERMS = ROOT / "germs"
COMPLEXES = ROOT / "complexes"


def run_cli(*argv):
    return main(list(argv))


def test_germfile_roundtrip():
    for path in sorted(GERMS.glob("*.germ")):
        gf = load_germ_file(str(path))
        again = parse_germ_file(format_germ_file(gf))
        assert again.name == gf.name
        assert again.symbolic_germ().components == gf.symbolic_germ().components
        if gf.perturbation is not None:
            assert (again.symbolic_germ(perturbed=True).components
                    == gf.symbolic_germ(perturbed=True).components)


def test_germfile_errors():
    with pytest.raises(GermFileError):
        parse_germ_file("germ X { n=3 p=4; components: z^2; }")  # no vars
    with pytest.raises(Exception):
        parse_germ_file("germ X { n=3 p=4; vars x y z; components: z^2, w^3; }")


def test_catalog_roundtrip_through_germfile():
    gf = load_germ_file(str(GERMS / "q2.germ"))
    entry = simple_entry("Q", k=2)
    assert gf.base_germ().components == entry.germ.components


def test_catalog_guards():
    with pytest.raises(CatalogError):
        simple_entry("B", k=1)
    with pytest.raises(CatalogError):
        simple_entry("P", k=3)  # 3 | k is excluded
    with pytest.raises(CatalogError):
        simple_entry("S", k=2)  # j missing
    with pytest.raises(CatalogError):
        nonsimple_entry("I", {"a": Fraction(1), "b": Fraction(1)})  # needs a != b
    with pytest.raises(CatalogError):
        nonsimple_entry("VII", {"a": Fraction(5, 4)})


def test_default_catalogs_instantiate():
    assert len(default_simple_entries()) == 22
    assert len(default_nonsimple_entries()) == 8


def test_cli_analyze_exit_codes(capsys):
    assert run_cli("analyze", str(GERMS / "q2.germ")) == 0
    out = capsys.readouterr().out
    assert "CANDIDATE" in out and "mu_I: 2" in out
    assert run_cli("analyze", str(GERMS / "a2.germ")) == 1
    capsys.readouterr()


def test_cli_analyze_json(capsys):
    assert run_cli("analyze", str(GERMS / "q2.germ"), "--json") == 0
    data = json.loads(capsys.readouterr().out)
    assert data["verdict"] == "CANDIDATE"
    assert data["mu_I"] == 2
    assert data["image_betti"] == {"3": 2}
    assert data["rows"][0]["classes"][0]["partition"] == [1, 1]


def test_cli_witness_exit_codes(capsys):
    assert run_cli("witness", str(GERMS / "q2.germ"), "--param", "s=1") == 0
    capsys.readouterr()
    assert run_cli("witness", str(GERMS / "q2.germ"), "--param", "s=-1") == 1
    capsys.readouterr()


def test_cli_witness_two_files(capsys, tmp_path):
    pert = tmp_path / "q2pert.germ"
    pert.write_text(
        "germ Q2pert {\n  n=3 p=4;\n  vars x y z;\n  params s=1;\n"
        "  components: x*z + y*z^2, z^3 + y^2*z - s*z;\n}\n")
    assert run_cli("witness", str(GERMS / "q2.germ"), str(pert)) == 0
    capsys.readouterr()


def test_cli_rules_only(capsys):
    assert run_cli("analyze", str(GERMS / "a2.germ"), "--rules-only") == 1
    out = capsys.readouterr().out
    assert "R1 at k=2" in out and out.strip().endswith("FAILS")


def test_cli_witness_inconclusive_exit(capsys, tmp_path):
    f = tmp_path / "ind.germ"
    f.write_text(
        "germ A1ind {\n  n=3 p=4;\n  vars x y z;\n  params s=1;\n"
        "  components: z^2, z^3 + x^2*z - y^2*z;\n"
        "  perturbation: z^2, z^3 + x^2*z - y^2*z - s*z;\n}\n")
    assert run_cli("witness", str(f)) == 2
    out = capsys.readouterr().out
    assert "INCONCLUSIVE" in out


def test_cli_parse_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.germ"
    bad.write_text("germ Bad { n=3 p=4; vars x y z; components: z^2 + , z^3; }")
    assert run_cli("analyze", str(bad)) == 64
    capsys.readouterr()


def test_cli_not_finite_exit(capsys, tmp_path):
    f = tmp_path / "sus.germ"
    f.write_text("germ Sus { n=3 p=4; vars x y z; components: z^2, z^3; }")
    assert run_cli("analyze", str(f)) == 3
    capsys.readouterr()


def test_cli_simplicial(capsys):
    assert run_cli("simplicial", str(COMPLEXES / "triangles.json"), "alt") == 0
    out = capsys.readouterr().out
    assert "AH_0: rank 1" in out
    assert run_cli("simplicial", str(COMPLEXES / "rp2.json"), "homology",
                   "--coeff", "f2") == 0
    out = capsys.readouterr().out
    assert out.count("rank 1") == 3
    assert run_cli("simplicial", str(COMPLEXES / "sphere-swap.json"), "smith") == 0
    capsys.readouterr()
    assert run_cli("simplicial", str(COMPLEXES / "sphere-reflection.json"), "floyd") == 0
    capsys.readouterr()
    assert run_cli("simplicial", str(COMPLEXES / "triangles.json"), "chi", "--json") == 0
    data = json.loads(capsys.readouterr().out)
    assert data["chi_alt_fixed_point"] == data["chi_alt_direct"] == "0" or \
        int(data["chi_alt_fixed_point"]) == data["chi_alt_direct"]


def test_cli_table_rows(capsys):
    assert run_cli("table", "simple", "--row", "A1", "--row", "Q2", "--row", "S1,2") == 0
    out = capsys.readouterr().out
    assert "A1" in out and "Q2" in out and "S1,2" in out


def test_cli_entrypoint_subprocess():
    proc = subprocess.run([sys.executable, "-m", "germlab.cli", "analyze",
                           str(GERMS / "q2.germ")], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "CANDIDATE" in proc.stdout
