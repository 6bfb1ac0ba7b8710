"""Voxelize the principal 3-D slice and check it against the octahedron it
converges to, then export the mesh for any OBJ viewer."""

from multibrot import (
    Box3D,
    EscapeParams,
    octahedron_mesh,
    square_params,
    voxelize_perplexbrot,
    write_obj,
)

p = 2
box = Box3D(-2.0, 2.0, -2.0, 2.0, -2.0, 2.0, 64, 64, 64)
grid = voxelize_perplexbrot(box, EscapeParams(p=p, max_iter=5000))

sq = square_params(p)
analytic = sq.l ** 3 / 6.0
estimate = grid.member_count * grid.voxel_volume
print(f"member voxels: {grid.member_count}")
print(f"estimated volume: {estimate:.6f}")
print(f"octahedron volume l^3/6: {analytic:.6f}")
print(f"relative gap: {abs(estimate - analytic) / analytic:.2%}")

mesh = octahedron_mesh(sq.t, sq.l)
write_obj(mesh, "perplexbrot_octahedron.obj")
print("wrote perplexbrot_octahedron.obj "
      f"({len(mesh.vertices)} vertices, {len(mesh.faces)} faces, "
      f"edge length {mesh.edge_lengths()[0]:.6f})")

# the same slice at an odd degree is not an octahedron; count it anyway
odd = voxelize_perplexbrot(box, EscapeParams(p=3, max_iter=5000))
print(f"degree 3 slice for contrast: {odd.member_count} member voxels, "
      f"volume {odd.member_count * odd.voxel_volume:.6f}")
