"""JSON / CSV / text renderings of structure tables and restructure matrices.

Output is canonical: classes in label order, constants sorted by class
index, so identical inputs always give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json

from .algebra import RestructureMatrix, StructureTable


def label_json(label):
    if isinstance(label, (int, str)):
        return label
    if isinstance(label, tuple):
        return list(label)
    return str(label)


def label_text(label) -> str:
    if isinstance(label, tuple):
        return "{" + ",".join(map(str, label)) + "}"
    return str(label)


def structure_json(table: StructureTable) -> dict:
    labels = table.labels
    return {
        "n": table.n,
        "statistic": table.statistic,
        "classes": [{"label": label_json(lab), "size": size}
                    for lab, size in zip(labels, table.sizes)],
        "constants": [
            {"a": label_json(labels[a]), "b": label_json(labels[b]),
             "c": label_json(labels[c]), "value": v}
            for (a, b, c), v in sorted(table.constants.items())
        ],
    }


def structure_csv(table: StructureTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["a", "b", "c", "value"])
    labels = table.labels
    for (a, b, c), v in sorted(table.constants.items()):
        w.writerow([label_text(labels[a]), label_text(labels[b]), label_text(labels[c]), v])
    return buf.getvalue()


def structure_text(table: StructureTable) -> str:
    lines = [f"statistic {table.statistic}, n = {table.n}: {len(table.labels)} classes"]
    for lab, size in zip(table.labels, table.sizes):
        lines.append(f"  class {label_text(lab)}: {size} elements")
    lines.append(f"  {len(table.constants)} non-zero structure constants")
    for (a, b, c), v in sorted(table.constants.items()):
        lines.append(f"  C[{label_text(table.labels[a])}, {label_text(table.labels[b])}, "
                     f"{label_text(table.labels[c])}] = {v}")
    return "\n".join(lines) + "\n"


def restructure_json(D: RestructureMatrix, **meta) -> dict:
    return {
        **meta,
        "source": D.source,
        "target": D.target,
        "rows": [label_json(x) for x in D.row_labels],
        "columns": [label_json(x) for x in D.col_labels],
        "entries": [list(r) for r in D.entries],
        "row_order": [label_json(D.row_labels[r]) for r in D.row_order],
        "column_order": [label_json(D.col_labels[c]) for c in D.col_order],
        "diagonal": list(D.diagonal),
        "lower_triangular": D.lower_triangular,
        "rank": D.rank,
        "spans_basis": D.spans_basis,
    }


def restructure_csv(D: RestructureMatrix) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"{D.source}\\{D.target}"] + [label_text(c) for c in D.col_labels])
    for lab, row in zip(D.row_labels, D.entries):
        w.writerow([label_text(lab)] + list(row))
    return buf.getvalue()


def restructure_text(D: RestructureMatrix) -> str:
    cols = [label_text(D.col_labels[c]) for c in D.col_order]
    width = max([len(c) for c in cols] + [len(str(v)) for r in D.entries for v in r] + [1])
    head_w = max(len(label_text(x)) for x in D.row_labels) if D.row_labels else 1
    lines = [f"restructure constants {D.source} -> {D.target} (triangular order)"]
    lines.append(" " * (head_w + 2) + " ".join(c.rjust(width) for c in cols))
    for r, row in zip(D.row_order, D.reordered()):
        lines.append(label_text(D.row_labels[r]).rjust(head_w) + "  "
                     + " ".join(str(v).rjust(width) for v in row))
    lines.append(f"diagonal: {list(D.diagonal)}")
    lines.append(f"lower triangular: {D.lower_triangular}; rank {D.rank} of "
                 f"{len(D.col_labels)} columns")
    return "\n".join(lines) + "\n"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"
