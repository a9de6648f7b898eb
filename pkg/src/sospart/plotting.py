"""Matplotlib figures written next to the text output of the CLI."""

from matplotlib.figure import Figure
from matplotlib.patches import Polygon

from .geometry import Partition
from .svg import SHAPE_FILL

__all__ = ["plot_partition"]


def plot_partition(part: Partition, path, label_threshold: int = 40, size: float = 7.0):
    """Save the partition as an image (format from the file extension)."""
    fig = Figure(figsize=(size, size))
    ax = fig.add_subplot(1, 1, 1)
    for dom in part:
        verts = [(float(x), float(y)) for x, y in dom.vertices]
        ax.add_patch(Polygon(verts, closed=True, facecolor=SHAPE_FILL[dom.shape],
                             edgecolor="#333333", linewidth=0.5))
        if len(part) <= label_threshold:
            cx = sum(x for x, _ in verts) / len(verts)
            cy = sum(y for _, y in verts) / len(verts)
            ax.text(cx, cy, str(dom.perm), ha="center", va="center", fontsize=7)
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1)
    ax.set_aspect("equal")
    ax.set_xlabel(r"$\alpha$")
    ax.set_ylabel(r"$\beta$")
    ax.set_title(f"{len(part)} domains, n = {part.n}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    return path
