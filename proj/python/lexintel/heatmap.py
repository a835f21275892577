"""Render a heatmap CSV written by `lexintel matrix` as a PNG.

Usable as the matrix plot hook:  plot_command = python3 -m lexintel.heatmap
"""

import argparse
import csv
import math


def read_grid(path):
    with open(path, newline="", encoding="utf-8") as f:
        rows = list(csv.reader(f))
    listeners = rows[0][1:]
    speakers = [r[0] for r in rows[1:]]
    values = [[float(v) if v else math.nan for v in r[1:]] for r in rows[1:]]
    return speakers, listeners, values


def render(csv_path, png_path, title=None):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    speakers, listeners, values = read_grid(csv_path)
    fig, ax = plt.subplots(figsize=(1.2 * len(listeners) + 2, 1.0 * len(speakers) + 1.5))
    image = ax.imshow(values, cmap="viridis", vmin=0)
    ax.set_xticks(range(len(listeners)), labels=listeners)
    ax.set_yticks(range(len(speakers)), labels=speakers)
    ax.set_xlabel("listener")
    ax.set_ylabel("speaker")
    for i, row in enumerate(values):
        for j, v in enumerate(row):
            if not math.isnan(v):
                ax.text(j, i, f"{v:.1f}", ha="center", va="center", color="white", fontsize=9)
    fig.colorbar(image, ax=ax, label="%")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(png_path, dpi=120)
    plt.close(fig)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("csv")
    parser.add_argument("png")
    parser.add_argument("--title")
    args = parser.parse_args(argv)
    render(args.csv, args.png, args.title)


if __name__ == "__main__":
    main()
