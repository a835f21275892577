import pytest

from lexintel import heatmap


def test_read_grid(tmp_path):
    path = tmp_path / "h.csv"
    path.write_text("speaker,es,ro\nes,,32.2\nro,30.5,\n")
    speakers, listeners, values = heatmap.read_grid(path)
    assert speakers == ["es", "ro"] and listeners == ["es", "ro"]
    assert values[0][1] == 32.2 and values[1][0] == 30.5


def test_render_png(tmp_path):
    pytest.importorskip("matplotlib")
    path = tmp_path / "h.csv"
    path.write_text("speaker,es,ro\nes,,32.2\nro,30.5,\n")
    heatmap.main([str(path), str(tmp_path / "h.png")])
    assert (tmp_path / "h.png").read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
