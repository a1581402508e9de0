import json

import numpy as np
import pytest

from core.errors import FieldFormatError
from modules.field import Field, SpaceGrid, TimeGrid, read_field, write_field


@pytest.fixture
def field():
    space, time = SpaceGrid.uniform(4, ndim=2), TimeGrid.over(0.0, 1.0, 5)
    values = np.arange(space.size * time.n, dtype=float).reshape(space.size, time.n) / 7.0
    return Field(space, time, values, "ramp")


def test_write_then_read(tmp_path, field):
    manifest = write_field(field, tmp_path / "ramp.json")
    loaded = read_field(manifest)
    assert loaded.name == "ramp"
    assert loaded.space == field.space
    assert loaded.time == field.time
    np.testing.assert_array_equal(loaded.values, field.values)
    assert (tmp_path / "ramp.f64").stat().st_size == field.values.size * 8


def test_manifest_points_at_payload(tmp_path, field):
    write_field(field, tmp_path / "v.json", data_name="payload.bin")
    manifest = json.loads((tmp_path / "v.json").read_text())
    assert manifest["data"] == "payload.bin"
    assert manifest["space"]["ndim"] == 2
    assert sorted(p.name for p in tmp_path.iterdir()) == ["payload.bin", "v.json"]


def test_missing_manifest_is_an_io_error(tmp_path):
    with pytest.raises(FileNotFoundError):
        read_field(tmp_path / "nope.json")


def test_truncated_payload(tmp_path, field):
    write_field(field, tmp_path / "v.json")
    payload = tmp_path / "v.f64"
    payload.write_bytes(payload.read_bytes()[:-8])
    with pytest.raises(FieldFormatError, match="grid product"):
        read_field(tmp_path / "v.json")


def test_non_finite_payload(tmp_path, field):
    write_field(field, tmp_path / "v.json")
    values = np.fromfile(tmp_path / "v.f64", dtype="<f8")
    values[3] = np.inf
    values.tofile(tmp_path / "v.f64")
    with pytest.raises(FieldFormatError, match="non-finite"):
        read_field(tmp_path / "v.json")


@pytest.mark.parametrize("text", ["{not json", "[1, 2]", '{"name": "x", "space": {}}'])
def test_malformed_manifest(tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text)
    with pytest.raises(FieldFormatError):
        read_field(path)


def test_bad_grid_in_manifest(tmp_path, field):
    write_field(field, tmp_path / "v.json")
    manifest = json.loads((tmp_path / "v.json").read_text())
    manifest["time"]["dt"] = -1.0
    (tmp_path / "v.json").write_text(json.dumps(manifest))
    with pytest.raises(FieldFormatError):
        read_field(tmp_path / "v.json")


def test_single_time_point_manifest_is_rejected(tmp_path):
    space = SpaceGrid.uniform(2)
    manifest = {
        "name": "spike",
        "space": space.to_dict(),
        "time": {"t0": 0.0, "dt": 0.5, "n": 1},
        "data": "spike.f64",
    }
    np.array([1.0, 2.0], dtype="<f8").tofile(tmp_path / "spike.f64")
    (tmp_path / "spike.json").write_text(json.dumps(manifest))
    with pytest.raises(FieldFormatError, match="n >= 2"):
        read_field(tmp_path / "spike.json")
