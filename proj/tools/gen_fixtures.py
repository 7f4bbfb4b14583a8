#!/usr/bin/env python3
"""Regenerate data/*.csv from the LaTeX source of the character-table article.

Usage: gen_fixtures.py <paper.md> <out-dir>

The three-qubit table is printed as four blocks: rows 1-50 and 51-67, each
split into columns 1-32 and 33-67. Blocks are stitched by row label, so the
block boundaries only need to agree on row labels; every row must end up with
exactly 67 entries or the script aborts.
"""
import re
import sys
from pathlib import Path

ROW_RE = re.compile(r"^\$\\chi_\{?(\d+)\}?\$\s*&(.*?)\\\\")


def parse_rows(lines):
    rows = []
    for line in lines:
        m = ROW_RE.match(line.strip())
        if not m:
            continue
        vals = [int(v.strip()) for v in m.group(2).split("&")]
        rows.append((int(m.group(1)), vals))
    return rows


def section(text, start, end):
    i = text.index(start)
    j = text.index(end, i)
    return text[i:j].splitlines()


def write_table(path, header_rows, rows, comments):
    with open(path, "w") as f:
        for c in comments:
            f.write(f"# {c}\n")
        for name, vals in header_rows:
            f.write(",".join([name] + [str(v) for v in vals]) + "\n")
        for idx, vals in rows:
            f.write(",".join([f"chi_{idx}"] + [str(v) for v in vals]) + "\n")


def main():
    paper = Path(sys.argv[1]).read_text()
    out = Path(sys.argv[2])
    out.mkdir(parents=True, exist_ok=True)

    # Two-qubit class table: label, size, representative.
    tab1 = section(paper, r"\caption{Conjugacy classes", r"\label{TabC2}")
    classes = {}
    word_map = [(r"P_(\d)\^\{-1\}", r"p\1^-1"), (r"P_(\d)\^(\d)", r"p\1^\2"),
                (r"H_(\d)", r"h\1"), (r"P_(\d)", r"p\1"), (r"Z", "z1")]
    for line in tab1:
        cells = [c.strip() for c in line.rstrip("\\ \n").split("&")]
        if len(cells) < 3 or not cells[0].startswith("No."):
            continue
        for off in (0, 3):
            if off + 2 >= len(cells) or not cells[off].startswith("No."):
                continue
            label = int(cells[off][3:])
            size = int(cells[off + 1])
            rep = cells[off + 2].replace("$", "").strip()
            if rep == "e":
                word = ""
            else:
                word = rep
                for pat, sub in word_map:
                    word = re.sub(pat, sub, word)
                word = re.sub(r"(?<=\S)(?=[hpz]\d)", " ", word)
            classes[label] = (size, word)
    assert sorted(classes) == list(range(1, 22)), sorted(classes)
    with open(out / "c2_classes.csv", "w") as f:
        f.write("# Conjugacy classes of the two-qubit Clifford group (Table 1).\n")
        f.write("label,size,word\n")
        for label in range(1, 22):
            size, word = classes[label]
            f.write(f"{label},{size},{word}\n")

    tab2 = section(paper, r"\caption{Character Table of", r"\label{TabCC2}")
    rows = parse_rows(tab2)
    assert len(rows) == 21 and all(len(v) == 21 for _, v in rows)
    write_table(out / "c2_chartab.csv",
                [("size", [classes[i][0] for i in range(1, 22)]),
                 ("word", [classes[i][1] for i in range(1, 22)])],
                rows, ["Character table of the two-qubit Clifford group (Table 2).",
                       "Columns follow the class labels No.1..No.21 of c2_classes.csv."])

    s4 = section(paper, r"Character $\backslash$ Representative", r"\end{tabular}")
    rows = parse_rows(s4)
    assert len(rows) == 5 and all(len(v) == 5 for _, v in rows)
    write_table(out / "s4_chartab.csv",
                [("word", ["", "h1", "p1^2", "h1 p1", "p1"])],
                rows, ["Character table of the one-qubit Clifford group (S4), columns e,H,P^2,HP,P.",
                       "Class sizes are not printed; derive them by column orthogonality."])

    # Three-qubit table: four blocks after the appendix anchor.
    app = paper[paper.index(r"\label{appc3}"):]
    blocks = [b for b in app.split(r"\begin{tabular}")[1:]]
    assert len(blocks) == 4, len(blocks)
    stitched = {}
    spans = []
    for b in blocks:
        head = [l for l in b.splitlines() if l.strip().startswith("&")][0]
        cols = [int(c) for c in head.strip().strip("\\").split("&") if c.strip()]
        spans.append((cols[0], cols[-1]))
        for idx, vals in parse_rows(b.splitlines()):
            assert len(vals) == len(cols), (idx, len(vals), len(cols))
            stitched.setdefault(idx, {})
            for c, v in zip(cols, vals):
                assert c not in stitched[idx]
                stitched[idx][c] = v
    assert spans == [(1, 32), (33, 67), (1, 32), (33, 67)], spans
    assert sorted(stitched) == list(range(1, 68))
    rows = []
    for idx in range(1, 68):
        assert sorted(stitched[idx]) == list(range(1, 68)), idx
        rows.append((idx, [stitched[idx][c] for c in range(1, 68)]))
    write_table(out / "c3_chartab.csv", [("class", list(range(1, 68)))], rows,
                ["Character table of the three-qubit Clifford group (appendix).",
                 "Stitched from four printed blocks: rows 1-50 / 51-67 x columns 1-32 / 33-67.",
                 "No class sizes are printed; derive them by column orthogonality."])

    with open(out / "order_table.csv", "w") as f:
        f.write("# Orders of the Clifford groups modulo global phase.\n")
        f.write("n,order\n")
        m = re.search(r"\$\|\\mathcal\{C\}_n\|\$ &(.*?)\\\\", paper)
        for n, v in enumerate(m.group(1).split("&"), start=1):
            f.write(f"{n},{int(v)}\n")

    # Decomposition vectors.
    c1 = re.findall(r"v_(\d)&=\(([\d,]+)\)", paper)
    with open(out / "c1_decomp.csv", "w") as f:
        f.write("# Decomposition vectors of the one-qubit adjoint tensor powers.\n")
        f.write("m,a,b,c,d,e\n")
        for m_, v in c1:
            f.write(f"{m_},{v}\n")
    c2sec = paper[paper.index(r"it turns out that $\chi=\chi_1+\chi_{14}$"):]
    c2sec = c2sec[:c2sec.index(r"\end{align*}")]
    flat = c2sec.replace("\n", " ").replace(r"\\", " ").replace("&", "").replace(r"\,", "")
    c2 = re.findall(r"v_(\d)=\((.*?)\)", flat, re.S)
    assert [m_ for m_, _ in c2] == ["1", "2", "3", "4", "5"], c2
    with open(out / "c2_decomp.csv", "w") as f:
        f.write("# Decomposition vectors of the two-qubit adjoint tensor powers, published row order.\n")
        f.write("m," + ",".join(f"chi_{i}" for i in range(1, 22)) + "\n")
        for m_, v in c2:
            vals = [int(x) for x in v.split(",")]
            assert len(vals) == 21
            f.write(f"{m_}," + ",".join(map(str, vals)) + "\n")
    c3sec = paper[paper.index(r"The decomposition of $(\mathcal{M}_8)^{\otimes m}$"):]
    c3sec = c3sec[c3sec.index(r"\begin{align*}"):c3sec.index(r"\end{align*}")]
    with open(out / "c3_decomp.csv", "w") as f:
        f.write("# Sparse decomposition vectors of the three-qubit adjoint tensor powers.\n")
        f.write("# The m=3 line prints '18\\chi_{40}\\chi_{43}' as a run-on; chi_43 is flagged.\n")
        f.write("m,row,coefficient,note\n")
        for m_, body in re.findall(r"v_(\d)=&(.*?)(?=v_\d=&|$)", c3sec, re.S):
            body = body.replace("\n", " ").replace(r"\\", " ").replace("&", "").replace(r"\,", "")
            for coef, braced, bare in re.findall(r"(\d*)\\chi_(?:\{(\d+)\}|(\d))", body):
                idx = braced or bare
                note = ""
                if m_ == "3" and idx == "43":
                    note = "run-on"
                f.write(f"{m_},{idx},{coef or 1},{note}\n")

    # One-qubit adjoint character on the classes e, H, P^2, HP, P.
    m = re.search(r"\\text\{ch\}\(\\mathcal\{M\}_2\)\$ &(.*?)\\\\", paper)
    vals = [int(v) for v in m.group(1).split("&")]
    assert len(vals) == 5
    with open(out / "c1_adjoint_row.csv", "w") as f:
        f.write("# Character of the conjugation action on 2x2 matrices.\n")
        f.write("word,,h1,p1^2,h1 p1,p1\n")
        f.write("chi_M," + ",".join(map(str, vals)) + "\n")

    # GAP input for the two-qubit presentation, verbatim.
    i = paper.index("gap>f:=FreeGroup")
    j = paper.index(r"\end{verbatim}", i)
    (out / "gap_c2.txt").write_text(paper[i:j])


if __name__ == "__main__":
    main()
