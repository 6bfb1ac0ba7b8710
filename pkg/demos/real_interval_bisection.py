"""Locate the real axis intersection of each degree-p set by bisection and
compare with the closed forms."""

from multibrot import EscapeParams, real_endpoint_bisection, real_interval

print(f"{'p':>3} {'closed lo':>12} {'bisected lo':>13} "
      f"{'closed hi':>12} {'bisected hi':>13}")
for p in (2, 3, 4, 6, 8):
    interval = real_interval(p)
    lo = real_endpoint_bisection(p, "left")
    hi = real_endpoint_bisection(p, "right")
    print(f"{p:>3} {interval.lo:>12.8f} {lo:>13.8f} {interval.hi:>12.8f} {hi:>13.8f}")

# the right endpoint is parabolic: orbits creep away from the fixed point,
# so finite iteration budgets overshoot it slightly
print()
for max_iter in (10 ** 3, 10 ** 4, 10 ** 5):
    hi = real_endpoint_bisection(2, "right", params=EscapeParams(p=2, max_iter=max_iter))
    print(f"p=2 right endpoint with max_iter={max_iter:>6}: {hi:.8f}  "
          f"(error {hi - 0.25:+.2e})")
