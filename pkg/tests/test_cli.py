import json

import pytest

from grassmann_lab.cli import main
from grassmann_lab.fixture import default_fixture_path
from grassmann_lab.report import graph_from_json_dict, graph_to_json_dict


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_json(capsys, j242):
    code, out, _ = run(capsys, "build", "--q", "2", "--n", "4", "--m", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["params"]["vertices"] == 35
    assert len(data["vertices"]) == 35
    assert data["vertices"][0]["matrix"] == ["1000", "0100"]
    assert len(data["edges"]) == 35 * 18 // 2
    # round-trip: reloading gives identical adjacency bitsets
    G = graph_from_json_dict(data)
    assert G.adjacency == j242.adjacency
    assert graph_to_json_dict(G) == data


def test_build_dot_triangle(capsys):
    code, out, _ = run(capsys, "build", "--q", "2", "--n", "2", "--m", "1", "--format", "dot")
    assert code == 0
    assert out.count(" -- ") == 3  # K_3
    assert 'v0 [label="v0"' in out


def test_build_text(capsys):
    code, out, _ = run(capsys, "build", "--q", "2", "--n", "4", "--m", "2")
    assert code == 0
    assert "35 vertices" in out


def test_build_too_large_exits_2(capsys):
    code, _, err = run(capsys, "build", "--q", "2", "--n", "10", "--m", "5")
    assert code == 2
    assert "enumeration too large" in err


def test_invalid_q_exits_3(capsys):
    code, _, err = run(capsys, "build", "--q", "6", "--n", "4", "--m", "2")
    assert code == 3
    assert "prime power" in err


def test_bad_flag_exits_3(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["build", "--q", "2"])
    assert exc.value.code == 3


def test_verify_j242(capsys):
    code, out, _ = run(capsys, "verify", "--q", "2", "--n", "4", "--m", "2")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert data["cliques"]["total_maximal_cliques"] == 30
    assert data["lemmas"]["dual"]["applicable"] is True
    assert data["lemmas"]["dual"]["ok"] is True


def test_verify_j252_skips_dual(capsys):
    code, out, _ = run(capsys, "verify", "--q", "2", "--n", "5", "--m", "2")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] is True
    assert data["cliques"]["stars"] == 31 and data["cliques"]["tops"] == 155
    assert data["lemmas"]["dual"] == {"applicable": False, "note": "requires n = 2m"}


def test_verify_q3(capsys):
    code, out, _ = run(capsys, "verify", "--q", "3", "--n", "4", "--m", "2")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_coreness_with_fixture(capsys):
    code, out, _ = run(
        capsys,
        "coreness", "--q", "2", "--n", "4", "--m", "2",
        "--fixture", str(default_fixture_path()),
    )
    assert code == 0
    data = json.loads(out)
    core = data["coreness"]
    assert core["verdict"] == "not-core"
    assert core["omega"] == 7 and core["alpha"] == 5 and core["chi"] == 7
    assert core["witness"]["classification"] == "colouring"
    assert data["fixture"]["ok"] is True
    assert data["fixture"]["chi_upper"] == 7


def test_tampered_fixture_exits_1(capsys, tmp_path):
    text = default_fixture_path().read_text()
    # swap A1 into L2: A1 and A2 are adjacent, breaking independence
    tampered = text.replace("L1: A1", "L1:").replace("L2: A2", "L2: A2 A1")
    path = tmp_path / "tampered.txt"
    path.write_text(tampered)
    code, out, _ = run(
        capsys, "coreness", "--q", "2", "--n", "4", "--m", "2", "--fixture", str(path)
    )
    assert code == 1
    data = json.loads(out)
    assert data["fixture"]["ok"] is False
    assert not data["fixture"]["independent_sets"]


def test_coreness_core_case(capsys):
    code, out, _ = run(capsys, "coreness", "--q", "2", "--n", "5", "--m", "2")
    assert code == 0
    core = json.loads(out)["coreness"]
    assert core["verdict"] == "core"
    assert core["integrality"]["value"] == "31/3"


def test_coreness_undetermined(capsys):
    code, out, _ = run(capsys, "coreness", "--q", "2", "--n", "6", "--m", "3")
    assert code == 0
    core = json.loads(out)["coreness"]
    assert core["verdict"] == "undetermined"
    assert core["integrality"] == {"is_integer": True, "value": 93}


def test_qbinom(capsys):
    code, out, _ = run(capsys, "qbinom", "--n", "4", "--m", "2")
    assert code == 0
    data = json.loads(out)["qbinom"]
    assert data["exponents"] == {"3": 1, "4": 1}
    assert data["polynomial"]["coeffs"] == [1, 1, 2, 1, 1]
    assert data["h"]["applicable"] is False
    assert data["h"]["f"]["text"] == "q^2 + 1"


def test_qbinom_at_value(capsys):
    code, out, _ = run(capsys, "qbinom", "--n", "5", "--m", "2", "--at", "2")
    assert code == 0
    data = json.loads(out)["qbinom"]
    assert data["value_at"] == {"q": 2, "value": 155}
    assert data["h"]["value_at"] == {"q": 2, "value": "31/3"}


def test_qbinom_with_scan(capsys):
    code, out, _ = run(capsys, "qbinom", "--n", "8", "--m", "3", "--q-max", "16")
    assert code == 0
    data = json.loads(out)["qbinom"]
    assert data["h"]["applicable"] is True
    assert data["h"]["exponents"]["3"] == -1
    assert all(not e["is_integer"] for e in data["scan"]["entries"])


def test_scan_command(capsys):
    code, out, _ = run(capsys, "scan", "--n", "5", "--m", "2", "--q-max", "64")
    assert code == 0
    data = json.loads(out)["qbinom"]["scan"]
    assert data["largest_integer_q"] is None
    assert len(data["entries"]) == 27


def test_witness_revalidates_from_json(capsys, j242):
    code, out, _ = run(capsys, "coreness", "--q", "2", "--n", "4", "--m", "2")
    assert code == 0
    witness = json.loads(out)["coreness"]["witness"]
    from grassmann_lab import validate_endomorphism

    endo = validate_endomorphism(j242, witness["map"])
    assert len(endo.image()) == witness["image_size"] == 7
    assert endo.is_injective() == witness["injective"] is False


def test_round_trip_q3(j342):
    data = graph_to_json_dict(j342)
    G = graph_from_json_dict(data)
    assert G.adjacency == j342.adjacency
    assert G.vertices == j342.vertices


def test_verify_complete_graph(capsys):
    code, out, _ = run(capsys, "verify", "--q", "2", "--n", "3", "--m", "1")
    assert code == 0
    data = json.loads(out)
    # the one maximal clique of a complete graph is the star over the origin
    assert data["cliques"]["total_maximal_cliques"] == 1
    assert data["cliques"]["stars"] == 1
    assert data["ok"] is True


def test_reports_are_deterministic(capsys):
    _, out1, _ = run(capsys, "verify", "--q", "2", "--n", "4", "--m", "2")
    _, out2, _ = run(capsys, "verify", "--q", "2", "--n", "4", "--m", "2")
    assert out1 == out2
    _, out1, _ = run(capsys, "coreness", "--q", "2", "--n", "4", "--m", "2")
    _, out2, _ = run(capsys, "coreness", "--q", "2", "--n", "4", "--m", "2")
    assert out1 == out2


def test_thread_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("GRASSMANN_LAB_THREADS", "4")
    code, out, _ = run(capsys, "qbinom", "--n", "4", "--m", "2")
    assert code == 0
    monkeypatch.setenv("GRASSMANN_LAB_THREADS", "zero")
    code, _, err = run(capsys, "qbinom", "--n", "4", "--m", "2")
    assert code == 3
    assert "GRASSMANN_LAB_THREADS" in err
