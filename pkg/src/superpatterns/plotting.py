"""Point-cloud renderings of words: each letter w_i drawn at (i, w_i)."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from pathlib import Path


def text_grid(
    word: Sequence[int],
    labels: Sequence[int] | None = None,
    highlight: Iterable[int] = (),
) -> str:
    """Render a word as rows of levels, highest level on top.

    ``labels`` replaces the printed value at each position (e.g. the ranks of
    the tie-broken permutation). Positions in ``highlight`` (1-based) are
    wrapped in brackets.
    """
    labels = list(word) if labels is None else list(labels)
    if len(labels) != len(word):
        raise ValueError("labels must have one entry per letter")
    marked = set(highlight)
    width = max(len(str(v)) for v in labels) + 2
    rows = []
    for level in range(max(word), 0, -1):
        cells = []
        for pos, (letter, lab) in enumerate(zip(word, labels), start=1):
            if letter != level:
                cells.append(" " * width)
            elif pos in marked:
                cells.append(f"[{lab}]".center(width))
            else:
                cells.append(str(lab).center(width))
        rows.append(f"{level:>3} |" + "".join(cells).rstrip())
    axis = "    +" + "-" * (width * len(word))
    ticks = "     " + "".join(str(i).center(width) for i in range(1, len(word) + 1))
    return "\n".join(rows + [axis, ticks.rstrip()])


def save_image(
    word: Sequence[int],
    path: str | Path,
    labels: Sequence[int] | None = None,
    highlight: Iterable[int] = (),
    title: str | None = None,
) -> Path:
    """Write a scatter of the word with matplotlib (optional dependency)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    path = Path(path)
    labels = list(word) if labels is None else list(labels)
    marked = set(highlight)
    xs = list(range(1, len(word) + 1))
    fig, ax = plt.subplots(figsize=(max(4, 0.45 * len(word)), 0.5 * max(word) + 1.5))
    for x, y, lab in zip(xs, word, labels):
        ax.text(x, y, str(lab), ha="center", va="center",
                fontweight="bold" if x in marked else "normal",
                color="tab:red" if x in marked else "black")
    ax.set_xlim(0.5, len(word) + 0.5)
    ax.set_ylim(0.5, max(word) + 0.5)
    ax.set_xticks(xs)
    ax.set_yticks(range(1, max(word) + 1))
    ax.set_xlabel("position")
    ax.set_ylabel("level")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
