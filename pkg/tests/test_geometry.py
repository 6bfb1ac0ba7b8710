"""Grids, rasterizers, point-set distances, meshes, and file formats."""

import csv
import math
import os

import numpy as np
import pytest

from multibrot import (
    Box3D,
    EscapeParams,
    RasterGrid,
    Window2D,
    agreement_report,
    discrete_hausdorff,
    hyperbrot_contains,
    is_member,
    octahedron_mesh,
    perplexbrot_contains,
    raster_hyperbrot,
    raster_multibrot,
    rasterize_membership,
    read_pgm,
    square_boundary,
    square_params,
    thread_count,
    voxelize_perplexbrot,
    write_csv,
    write_obj,
    write_pgm,
)


# -- grid definitions ----------------------------------------------------------


def test_window_validation_and_centers():
    w = Window2D(-2.0, 2.0, -1.0, 1.0, 4, 2)
    assert w.x_centers().tolist() == [-1.5, -0.5, 0.5, 1.5]
    assert w.y_centers().tolist() == [-0.5, 0.5]
    for bad in [(-2.0, -2.0, 0.0, 1.0, 4, 4), (0.0, 1.0, 1.0, 0.0, 4, 4),
                (math.nan, 1.0, 0.0, 1.0, 4, 4)]:
        with pytest.raises(ValueError):
            Window2D(*bad)
    with pytest.raises(ValueError):
        Window2D(-2.0, 2.0, -1.0, 1.0, 1, 4)


def test_box_validation_and_centers():
    b = Box3D(-2.0, 2.0, -2.0, 2.0, 0.0, 1.0, 4, 4, 2)
    assert b.z_centers().tolist() == [0.25, 0.75]
    with pytest.raises(ValueError):
        Box3D(-2.0, 2.0, -2.0, 2.0, 1.0, 0.0, 4, 4, 4)
    with pytest.raises(ValueError):
        Box3D(-2.0, 2.0, -2.0, 2.0, 0.0, 1.0, 4, 4, 1)


def test_raster_grid_shape_check():
    w = Window2D(-1.0, 1.0, -1.0, 1.0, 8, 4)
    with pytest.raises(ValueError):
        RasterGrid(np.zeros((8, 4), dtype=bool), w, None)
    grid = RasterGrid(np.ones((4, 8), dtype=bool), w, None)
    assert grid.member_count == 32
    assert grid.member_fraction == 1.0


# -- rasterizers -----------------------------------------------------------------


def test_multibrot_raster_matches_scalar_membership():
    window = Window2D(-2.1, 0.8, -1.2, 1.2, 24, 16)
    params = EscapeParams(p=2, max_iter=150)
    grid = raster_multibrot(window, params)
    xs, ys = window.x_centers(), window.y_centers()
    for iy in range(16):
        for ix in range(24):
            c = complex(xs[ix], ys[iy])
            assert grid.bits[iy, ix] == is_member(c, params)


def test_multibrot_raster_is_thread_deterministic():
    window = Window2D(-2.0, 0.6, -1.2, 1.2, 96, 130)  # spans multiple chunks
    params = EscapeParams(p=2, max_iter=200)
    serial = raster_multibrot(window, params, threads=1)
    for workers in (2, 5):
        threaded = raster_multibrot(window, params, threads=workers)
        assert np.array_equal(serial.bits, threaded.bits)


def test_multibrot_raster_is_symmetric_about_the_real_axis():
    window = Window2D(-2.0, 0.5, -1.25, 1.25, 50, 40)
    grid = raster_multibrot(window, EscapeParams(p=2, max_iter=300))
    assert np.array_equal(grid.bits, grid.bits[::-1])


def test_hyperbrot_raster_matches_the_analytic_square():
    window = Window2D(-2.0, 1.0, -1.5, 1.5, 256, 256)
    params = EscapeParams(p=2, max_iter=2000)
    grid = raster_hyperbrot(window, params)
    sq = square_params(2)
    report = agreement_report(grid, sq.contains, sq.boundary_l1)
    assert report.agreement_fraction >= 0.999
    assert report.band_width <= 0.01
    # cell-count area against the square's closed-form area l**2/2
    cell = (3.0 / 256) * (3.0 / 256)
    assert grid.member_count * cell == pytest.approx(sq.l ** 2 / 2.0, rel=0.02)


def test_hyperbrot_raster_matches_split_membership_pointwise():
    window = Window2D(-1.9, 0.7, -1.3, 1.2, 21, 17)
    params = EscapeParams(p=2, max_iter=400)
    grid = raster_hyperbrot(window, params)
    xs, ys = window.x_centers(), window.y_centers()
    from multibrot import Hyperbolic
    for iy in range(17):
        for ix in range(21):
            expected = is_member(Hyperbolic(xs[ix], ys[iy]), params)
            assert grid.bits[iy, ix] == expected


def test_perplexbrot_voxels_match_the_analytic_octahedron():
    box = Box3D(-2.0, 2.0, -2.0, 2.0, -2.0, 2.0, 32, 32, 32)
    params = EscapeParams(p=2, max_iter=1500)
    grid = voxelize_perplexbrot(box, params)
    assert grid.bits.shape == (32, 32, 32)
    report = agreement_report(
        grid,
        lambda x, y, z: perplexbrot_contains(x, y, z, 2),
        lambda x, y, z: np.abs(np.abs(x + 0.875) + np.abs(y) + np.abs(z) - 1.125),
    )
    assert report.agreement_fraction >= 0.999
    assert report.band_width <= 0.07
    sq = square_params(2)
    expected = (sq.l ** 3 / 6.0) / grid.voxel_volume
    assert grid.member_count == pytest.approx(expected, rel=0.05)
    assert grid.voxel_volume == pytest.approx((4.0 / 32) ** 3, rel=1e-15)


def test_perplexbrot_voxels_match_scalar_membership_pointwise():
    box = Box3D(-1.5, 0.5, -1.0, 1.0, -1.0, 1.0, 6, 5, 4)
    params = EscapeParams(p=2, max_iter=300)
    grid = voxelize_perplexbrot(box, params)
    from multibrot import perplexbrot_member
    xs, ys, zs = box.x_centers(), box.y_centers(), box.z_centers()
    for iz in range(4):
        for iy in range(5):
            for ix in range(6):
                expected = perplexbrot_member(xs[ix], ys[iy], zs[iz], params)
                assert grid.bits[iz, iy, ix] == expected


def test_rasterize_membership_evaluates_cell_centers():
    window = Window2D(0.0, 4.0, 0.0, 2.0, 4, 2)
    grid = rasterize_membership(window, lambda x, y: x + y < 2.1)
    assert grid.bits.tolist() == [
        [True, True, False, False],
        [True, False, False, False],
    ]


def test_thread_count_env_parsing(monkeypatch):
    monkeypatch.delenv("MULTIBROT_THREADS", raising=False)
    assert thread_count() >= 1
    monkeypatch.setenv("MULTIBROT_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("MULTIBROT_THREADS", "0")
    assert thread_count() == (os.cpu_count() or 1)
    monkeypatch.setenv("MULTIBROT_THREADS", "-2")
    with pytest.raises(ValueError):
        thread_count()
    monkeypatch.setenv("MULTIBROT_THREADS", "lots")
    with pytest.raises(ValueError):
        thread_count()


# -- agreement reports -------------------------------------------------------------


def test_agreement_report_against_matching_rule():
    window = Window2D(-2.0, 1.0, -1.5, 1.5, 64, 64)
    grid = rasterize_membership(window, lambda x, y: hyperbrot_contains(x, y, 2))
    sq = square_params(2)
    report = agreement_report(grid, sq.contains, sq.boundary_l1)
    assert report.disagreements == 0
    assert report.agreement_fraction == 1.0
    assert report.band_width == 0.0
    assert report.cells == 64 * 64


def test_agreement_report_counts_disagreements():
    window = Window2D(0.0, 1.0, 0.0, 1.0, 4, 4)
    grid = rasterize_membership(window, lambda x, y: x < 0.5)
    report = agreement_report(grid, lambda x, y: (x < 0.5) | (y < 0.25))
    assert report.cells == 16
    assert report.disagreements == 2
    assert report.band_width is None
    row = report.as_row()
    assert row["cells"] == 16 and row["disagreements"] == 2


def test_agreement_report_grid_vs_grid_and_shape_errors():
    window = Window2D(0.0, 1.0, 0.0, 1.0, 8, 8)
    a = rasterize_membership(window, lambda x, y: x < 0.5)
    b = rasterize_membership(window, lambda x, y: x < 0.5)
    assert agreement_report(a, b).disagreements == 0
    other = rasterize_membership(Window2D(0.0, 1.0, 0.0, 1.0, 4, 4), lambda x, y: x < 0.5)
    with pytest.raises(ValueError):
        agreement_report(a, other)


# -- point sets and distances ---------------------------------------------------


def test_square_boundary_lies_on_the_boundary():
    pts = square_boundary(-0.875, 1.125, 64)
    assert pts.shape == (256, 2)
    l1 = np.abs(pts[:, 0] + 0.875) + np.abs(pts[:, 1])
    assert np.abs(l1 - 1.125).max() <= 1e-12
    corners = square_boundary(1.0, 2.0, 1)
    assert sorted(map(tuple, corners)) == [(-1.0, 0.0), (1.0, -2.0), (1.0, 2.0), (3.0, 0.0)]


def test_square_boundary_validation():
    with pytest.raises(ValueError):
        square_boundary(0.0, 1.0, 0)
    with pytest.raises(ValueError):
        square_boundary(0.0, -1.0, 8)


def test_discrete_hausdorff_axioms_and_known_values():
    a = np.array([[0.0, 0.0]])
    b = np.array([[3.0, 4.0]])
    assert discrete_hausdorff(a, a) == 0.0
    assert discrete_hausdorff(a, b) == 5.0
    assert discrete_hausdorff(b, a) == 5.0
    both = np.array([[0.0, 0.0], [3.0, 4.0]])
    assert discrete_hausdorff(a, both) == 5.0  # directed part dominates
    with pytest.raises(ValueError):
        discrete_hausdorff(a, np.empty((0, 2)))
    with pytest.raises(ValueError):
        discrete_hausdorff(a, np.array([[1.0, 2.0, 3.0]]))


def test_discrete_hausdorff_converges_to_the_analytic_distance():
    sq = square_params(2)
    errors = []
    for n in (32, 128):
        sample = square_boundary(sq.t, sq.l / 2.0, n)
        limit = square_boundary(0.0, 1.0, n)
        spacing = max(1.0, sq.l / 2.0) * math.sqrt(2.0) / n
        err = abs(discrete_hausdorff(sample, limit) - 1.0)
        errors.append(err)
        assert err <= 2.0 * spacing
    assert errors[1] <= errors[0] + 1e-12


def test_discrete_hausdorff_handles_3d_points():
    a = np.array([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]])
    b = np.array([[0.0, 0.0, 2.0]])
    assert discrete_hausdorff(a, b) == pytest.approx(math.sqrt(5.0), rel=1e-15)


# -- octahedron mesh -------------------------------------------------------------


def test_octahedron_mesh_geometry():
    sq = square_params(2)
    mesh = octahedron_mesh(sq.t, sq.l)
    assert mesh.vertices.shape == (6, 3)
    assert mesh.faces.shape == (8, 3)
    assert mesh.edges().shape == (12, 2)
    target = sq.l * math.sqrt(2.0) / 2.0
    assert np.abs(mesh.edge_lengths() - target).max() <= 1e-12
    l1 = (np.abs(mesh.vertices[:, 0] - sq.t)
          + np.abs(mesh.vertices[:, 1]) + np.abs(mesh.vertices[:, 2]))
    assert np.abs(l1 - sq.l / 2.0).max() <= 1e-12


def test_octahedron_mesh_is_closed_and_outward():
    mesh = octahedron_mesh(-0.875, 2.25)
    uses = {}
    for face in mesh.faces:
        for k in range(3):
            edge = tuple(sorted((face[k], face[(k + 1) % 3])))
            uses[edge] = uses.get(edge, 0) + 1
    assert len(uses) == 12
    assert set(uses.values()) == {2}
    center = np.array([-0.875, 0.0, 0.0])
    for face in mesh.faces:
        v0, v1, v2 = mesh.vertices[face]
        normal = np.cross(v1 - v0, v2 - v0)
        centroid = (v0 + v1 + v2) / 3.0
        assert np.dot(normal, centroid - center) > 0.0


def test_octahedron_mesh_validation():
    with pytest.raises(ValueError):
        octahedron_mesh(0.0, 0.0)
    with pytest.raises(ValueError):
        octahedron_mesh(0.0, -1.0)


# -- file formats -----------------------------------------------------------------


def test_pgm_roundtrip_and_header(tmp_path):
    window = Window2D(-2.0, 1.0, -1.5, 1.5, 8, 4)
    bits = np.zeros((4, 8), dtype=bool)
    bits[0, 0] = True   # lowest y row, leftmost x
    bits[3, 7] = True
    grid = RasterGrid(bits, window, None)
    path = tmp_path / "tiny.pgm"
    write_pgm(grid, path)
    raw = path.read_bytes()
    assert raw.startswith(b"P5\n8 4\n255\n")
    assert len(raw) == len(b"P5\n8 4\n255\n") + 32
    img = read_pgm(path)
    assert img.shape == (4, 8)
    assert np.array_equal(img[::-1] == 0, bits)  # rows are flipped so y is up


def test_pgm_output_is_byte_identical_across_runs(tmp_path):
    window = Window2D(-2.0, 0.6, -1.2, 1.2, 64, 48)
    params = EscapeParams(p=2, max_iter=150)
    paths = []
    for k, workers in enumerate((1, 4)):
        grid = raster_multibrot(window, params, threads=workers)
        path = tmp_path / f"run{k}.pgm"
        write_pgm(grid, path)
        paths.append(path.read_bytes())
    assert paths[0] == paths[1]


def test_read_pgm_rejects_other_formats(tmp_path):
    path = tmp_path / "bad.pgm"
    path.write_bytes(b"P2\n2 2\n255\n0 0 0 0")
    with pytest.raises(ValueError):
        read_pgm(path)


def test_read_pgm_skips_comments(tmp_path):
    path = tmp_path / "comment.pgm"
    path.write_bytes(b"P5\n# made elsewhere\n2 2\n255\n\x00\xff\xff\x00")
    img = read_pgm(path)
    assert img.tolist() == [[0, 255], [255, 0]]


def test_obj_export_lists_vertices_and_faces(tmp_path):
    mesh = octahedron_mesh(-0.875, 2.25)
    path = tmp_path / "oct.obj"
    write_obj(mesh, path)
    lines = path.read_text().strip().splitlines()
    v_lines = [ln for ln in lines if ln.startswith("v ")]
    f_lines = [ln for ln in lines if ln.startswith("f ")]
    assert len(v_lines) == 6 and len(f_lines) == 8
    got = np.array([[float(s) for s in ln.split()[1:]] for ln in v_lines])
    assert np.allclose(got, mesh.vertices, atol=0.0)
    for ln in f_lines:
        idx = [int(s) for s in ln.split()[1:]]
        assert len(idx) == 3 and all(1 <= i <= 6 for i in idx)


def test_csv_writer_roundtrip(tmp_path):
    rows = [{"a": 1, "b": 2.5}, {"a": 3, "b": -1.0}]
    path = tmp_path / "table.csv"
    write_csv(path, rows)
    with open(path, newline="") as fh:
        got = list(csv.DictReader(fh))
    assert got == [{"a": "1", "b": "2.5"}, {"a": "3", "b": "-1.0"}]
    with pytest.raises(ValueError):
        write_csv(tmp_path / "empty.csv", [])
    write_csv(path, rows, fieldnames=["b", "a"])
    assert open(path).readline().strip() == "b,a"
