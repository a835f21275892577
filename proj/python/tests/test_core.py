import json
import math

import pytest

lexintel = pytest.importorskip("lexintel")


def test_dli_examples():
    assert lexintel.dli(1.0, 1.0) == 1.0
    assert lexintel.dli(0.8, 0.6) == pytest.approx(0.288 / 0.52, abs=1e-12)
    alpha, beta = lexintel.alpha_beta(0.8, 0.6)
    assert alpha * 0.8 + beta * 0.6 == pytest.approx(lexintel.dli(0.8, 0.6), abs=1e-12)
    assert lexintel.check_bounds(0.8, 0.6, 0.5538461538461539)
    with pytest.raises(lexintel.LexintelError):
        lexintel.dli(1.5, 0.2)


def test_text_and_surface():
    assert lexintel.strip_accents("pregăti") == "pregati"
    assert lexintel.tokenize("Temps, temps!") == ["temps", "temps"]
    assert lexintel.stem("es", "luna") == "lun"
    assert lexintel.levenshtein("om", "hombre") == 4
    assert lexintel.levenshtein("lună", "lune") == 1
    assert lexintel.orthographic_similarity("om", "hombre") == pytest.approx(1 / 3)
    assert lexintel.phonetic_similarity(["t", "ɑ̃"], ["t", "ɛ", "m", "p", "o"]) == pytest.approx(0.2)


def test_semantics():
    assert lexintel.cosine_similarity([1, 0], [1, 1]) == pytest.approx(math.sqrt(0.5))
    assert lexintel.contextual_similarity([[1, 0], [0, 1]], [[1, 0]]) == pytest.approx(0.5)
    points = [[0.0, 0.0]] * 10 + [[5.0, 5.0]] * 10
    result = lexintel.affinity_propagation(points)
    assert result["converged"]
    assert len(result["exemplars"]) == 2
    assert len(set(result["labels"][:10])) == 1 and len(set(result["labels"][10:])) == 1


def test_spearman():
    assert lexintel.spearman([1, 2, 3], [1, 3, 2]) == pytest.approx(0.5)
    x = list(range(10))
    assert lexintel.permutation_p_value(x, x, 10000, 1) <= 0.001
    with pytest.raises(lexintel.LexintelError, match="insufficient permutations"):
        lexintel.permutation_p_value(x, x, 10, 1)


def test_matrix_on_fixture(fixtures, tmp_path):
    conf = fixtures / "e2e" / "run.conf"
    written = lexintel.run("matrix", str(conf), {"output": str(tmp_path)})
    assert any(p.endswith("matrix.json") for p in written)
    expected = json.loads((fixtures / "e2e" / "expected.json").read_text())
    matrix = json.loads((tmp_path / "matrix.json").read_text())
    for entry in matrix["configurations"]:
        key = f'{entry["surface_channel"]}_{entry["semantic_channel"]}'
        for score in entry["scores"]:
            direction = f'{score["speaker"]}->{score["listener"]}'
            assert score["score"] == pytest.approx(expected["configurations"][key][direction]["score"], abs=1e-9)


def test_config_errors(fixtures, tmp_path):
    conf = fixtures / "e2e" / "run.conf"
    with pytest.raises(lexintel.ConfigError, match="absent"):
        lexintel.run("stats", str(conf), {"output": str(tmp_path), "corpus.es-ro": str(tmp_path / "absent")})
    with pytest.raises(lexintel.ConfigError):
        lexintel.run("dance", str(conf))
