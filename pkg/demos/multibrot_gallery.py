"""Render the complex-plane sets for several degrees side by side."""

import matplotlib.pyplot as plt

from multibrot import EscapeParams, Window2D, escape_bound, raster_multibrot

degrees = (2, 3, 4, 8)
fig, axes = plt.subplots(1, len(degrees), figsize=(4 * len(degrees), 4))
for ax, p in zip(axes, degrees):
    bound = escape_bound(p)
    window = Window2D(-bound, bound, -bound, bound, 400, 400)
    grid = raster_multibrot(window, EscapeParams(p=p, max_iter=400))
    ax.imshow(grid.bits, origin="lower", cmap="gray_r",
              extent=(window.x_lo, window.x_hi, window.y_lo, window.y_hi))
    ax.set_title(f"p = {p}")
    print(f"p={p}: window radius {bound:.4f}, "
          f"member fraction {grid.member_fraction:.3f}")

fig.tight_layout()
fig.savefig("multibrot_gallery.png", dpi=150)
print("wrote multibrot_gallery.png")
