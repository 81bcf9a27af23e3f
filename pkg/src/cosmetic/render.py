"""SVG pictures of the curve invariant of a box-class knot.

The cylinder is cut open to the strip [0, 1] x [-g-1, g+1] with the meridian
at x = 1/2 and marked points at (1/2, h + 1/2).  The distinguished curve is
the horizontal line y = 0.  A simple figure eight at height s is a thin loop
whose two vertical strands run along the meridian from s - 1/2 to s + 1/2,
joined by a cap above and crossing each other below.  Overlay line i for
slope p/q passes through (1/2, -1/2 + i/q + eps) and wraps around the
cylinder, gaining p/q in height per turn.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from xml.sax.saxutils import escape

from .curves import CurveProfile
from .errors import UnsupportedProfile
from .surgery import SlopePair

SCALE = 100
MID = 0.5


def _fmt(v: float) -> str:
    out = f"{round(v, 3):.3f}".rstrip("0").rstrip(".")
    return "0" if out in ("-0", "") else out


class _Canvas:
    def __init__(self, top: float):
        self.top = top

    def pt(self, x: float, y: float) -> str:
        return f"{_fmt(SCALE * x)} {_fmt(SCALE * (self.top - y))}"

    def path(self, points, close=False) -> str:
        head, *rest = points
        d = "M " + self.pt(*head) + "".join(" L " + self.pt(*p) for p in rest)
        if close:
            d += " L " + self.pt(*head)
        return d


def _eight(s: int, w: float) -> list[tuple[float, float]]:
    lo, hi = s - 0.5, s + 0.5
    return [
        (MID - w, lo), (MID - w, hi), (MID, hi + w), (MID + w, hi), (MID + w, lo),
        (MID - w, lo - 2 * w), (MID, lo - 3 * w), (MID + w, lo - 2 * w),
    ]


def overlay_segments(slope: SlopePair, sign: int, top: float, bottom: float):
    """Per spin^c line, the straight pieces inside the strip."""
    p, q = slope.p, slope.q
    rise = Fraction(sign * p, q)
    eps = Fraction(1, 3 * q)  # keeps crossings off the marked points and the cut
    lines = []
    for i in range(p):
        y0 = Fraction(-1, 2) + Fraction(i, q) + eps
        pieces = []
        # piece t covers x in [0, 1] with y = y0 + rise (x - 1/2 + t)
        span = int((top - bottom) / abs(rise)) + 3
        for t in range(-span, span + 1):
            ya = y0 + rise * (Fraction(-1, 2) + t)
            yb = y0 + rise * (Fraction(1, 2) + t)
            if max(ya, yb) < bottom or min(ya, yb) > top:
                continue
            pieces.append(_clip(float(ya), float(yb), bottom, top))
        lines.append([pc for pc in pieces if pc])
    return lines


def _clip(ya: float, yb: float, bottom: float, top: float):
    xa, xb = 0.0, 1.0

    def at(y):
        return xa + (y - ya) / (yb - ya) * (xb - xa)

    pts = [(xa, ya), (xb, yb)]
    out = []
    for x, y in pts:
        if y > top:
            x, y = at(top), top
        elif y < bottom:
            x, y = at(bottom), bottom
        out.append((x, y))
    return out if out[0] != out[1] else None


def render_curves(profile: CurveProfile, overlay: SlopePair | None = None, sign: int = 1,
                  title: str = "") -> str:
    if not profile.box_class or profile.e is None:
        raise UnsupportedProfile("rendering needs a box-class profile")
    g = profile.genus
    top, bottom = g + 1, -g - 1
    cv = _Canvas(top)
    width, height = SCALE, SCALE * (top - bottom)

    per_height = Counter()
    for (s, _d), c in profile.e.items():
        per_height[s] += c
    p_q = (overlay.p + 3 * overlay.q) if overlay else 4
    w_max = 0.3 / p_q

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append(f'<rect x="0" y="0" width="{width}" height="{height}" fill="white" stroke="#999"/>')
    out.append(f'<path id="meridian" class="meridian" d="{cv.path([(MID, bottom), (MID, top)])}" '
               'stroke="#ccc" stroke-dasharray="4 3" fill="none"/>')
    out.append(f'<path id="gamma0" class="curve" d="{cv.path([(0, 0), (1, 0)])}" '
               'stroke="black" fill="none"/>')

    seen = Counter()
    for (s, d), c in sorted(profile.e.items()):
        for _ in range(c):
            seen[s] += 1
            w = w_max * seen[s] / per_height[s]
            pid = f"eight-s{s}-d{d}-{seen[s]}"
            out.append(f'<path id="{pid}" class="curve" d="{cv.path(_eight(s, w), close=True)}" '
                       'stroke="#1f5fa8" fill="none"/>')
    for h in range(bottom, top):
        x, y = cv.pt(MID, h + 0.5).split()
        out.append(f'<circle class="peg" cx="{x}" cy="{y}" r="2.5" fill="black"/>')
    if overlay is not None:
        for i, pieces in enumerate(overlay_segments(overlay, sign, top, bottom)):
            d = " ".join(cv.path(pc) for pc in pieces)
            out.append(f'<path id="line-{i}" class="overlay" d="{d}" stroke="#c0392b" fill="none"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
