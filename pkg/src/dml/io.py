"""JSON and CSV artifacts.

Every artifact carries a ``meta`` block with the tool version, the resolved
run configuration, the seed and the working precision.  JSON is written with
sorted keys and CSV files start with ``# key: value`` comment lines, so an
identical run produces identical bytes.
"""

import csv
import io
import json

from . import __version__


def metadata(config: dict, seed=None, precision=None) -> dict:
    return {"version": __version__, "config": dict(config), "seed": seed, "precision": precision}


def dumps_json(payload: dict, meta: dict) -> str:
    return json.dumps({**payload, "meta": meta}, sort_keys=True, indent=2) + "\n"


def _comment_lines(meta: dict) -> str:
    lines = [f"# version: {meta['version']}",
             f"# config: {json.dumps(meta['config'], sort_keys=True)}",
             f"# seed: {meta['seed']}",
             f"# precision: {meta['precision']}"]
    return "\n".join(lines) + "\n"


def dumps_csv(header, rows, meta: dict, footer: dict = None) -> str:
    """CSV text with metadata comments on top and optional ``# key: value`` footer."""
    buf = io.StringIO()
    buf.write(_comment_lines(meta))
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    for key, value in (footer or {}).items():
        buf.write(f"# {key}: {value}\n")
    return buf.getvalue()


def read_csv(text: str):
    """Parse an artifact back into ``(comments, header, rows)``; values stay strings."""
    comments, body = {}, []
    for line in text.splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition(": ")
            comments[key] = value
        elif line:
            body.append(line)
    rows = list(csv.reader(body))
    return comments, rows[0], rows[1:]


def histogram_csv(hist, meta: dict) -> str:
    rows = [(repr(float(a)), repr(float(b)), repr(float(c)), repr(float(d)), n) for a, b, c, d, n in hist.rows()]
    return dumps_csv(["x_lo", "x_hi", "y_lo", "y_hi", "count"], rows, meta)


def quadrature_csv(nodes, weights, epsilon_max, meta: dict, digits: int = 30) -> str:
    def s(x):
        return x.context.nstr(x, digits, strip_zeros=False)

    rows = [(s(x), s(w)) for x, w in zip(nodes, weights)]
    return dumps_csv(["node", "weight"], rows, meta, {"epsilon_max": s(epsilon_max)})


def density_csv(grid, meta: dict) -> str:
    rows = [(repr(t), repr(a), repr(b)) for t, a, b in grid]
    return dumps_csv(["t", "f_hs", "f_bures"], rows, meta)


def write_text(path, text: str):
    with open(path, "w", newline="") as fh:
        fh.write(text)
