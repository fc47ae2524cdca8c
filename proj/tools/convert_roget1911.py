#!/usr/bin/env python3
"""Convert the 1911 Roget category data shipped with the PyRoget package
into the line-oriented .kbt corpus format read by `lexkb ingest`.

The 1911 extraction carries the class/section/sub-section hierarchy and the
word list of every head, but no part-of-speech blocks or semicolon groups.
Those are reconstructed here:

  * part of speech is guessed per word from its shape (see guess_pos);
  * each part-of-speech block becomes one paragraph whose words are cut into
    semicolon groups of GROUP_SIZE in alphabetical order;
  * head groups pair consecutive heads of the same sub-section.

Usage:
    pip download --no-deps PyRoget==0.0.3 -d /tmp/pyroget
    tar xzf /tmp/pyroget/PyRoget-0.0.3.tar.gz -C /tmp/pyroget
    python3 tools/convert_roget1911.py /tmp/pyroget/PyRoget-0.0.3/PyRoget/roget \
        data/corpus/roget1911.kbt
"""

import pickle
import re
import sys
from pathlib import Path

GROUP_SIZE = 8
POS_ORDER = ["N.", "ADJ.", "VB.", "ADV.", "INT."]
ADJ_SUFFIXES = ("ous", "ive", "ful", "less", "able", "ible", "ic", "ical", "ary", "ent", "ant", "ish")
VB_SUFFIXES = ("ize", "ify", "ate")
ORDINAL_CLASSES = {("A", None): 1, ("B", None): 2, ("C", None): 3, ("D", "I"): 4,
                   ("D", "II"): 5, ("E", "III"): 6, ("E", "IV"): 7, ("F", None): 8}


def load(directory, name):
    with open(directory / name, "rb") as f:
        return pickle.load(f, encoding="utf-8")


def guess_pos(word):
    if word.endswith("!"):
        return "INT."
    if word.startswith(("be ", "to ")):
        return "VB."
    if " " in word:
        return "N."
    if word.endswith("ly"):
        return "ADV."
    if word.endswith(ADJ_SUFFIXES):
        return "ADJ."
    if word.endswith(VB_SUFFIXES):
        return "VB."
    return "N."


def head_sort_key(code):
    m = re.match(r"cat(\d+)(?:\.(\w+))?$", code)
    return (int(m.group(1)), m.group(2) or "")


def nice(name):
    return name.strip().capitalize()


def main(src, dst):
    src = Path(src)
    parent = load(src, "full_childparent.txt")
    names = load(src, "node_codes.txt")
    words = load(src, "thes_cat.txt")

    heads = sorted(words, key=head_sort_key)
    records = []
    for number, code in enumerate(heads, start=1):
        chain = [code]
        while chain[-1] in parent and parent[chain[-1]] != 0 and parent[chain[-1]] != "0":
            chain.append(parent[chain[-1]])
        chain.reverse()  # class first
        top = chain[0]
        division = chain[1] if chain[1] in ("I", "II", "III", "IV") else None
        rest = chain[2:] if division else chain[1:]
        class_num = ORDINAL_CLASSES[(top, division)]
        class_name = nice(names[division] if division else names[top])
        section_code = rest[0]
        section_num = int(section_code) if section_code.isdigit() else 0
        section_name = nice(names[section_code])
        subsection = nice(names[rest[1]]) if len(rest) > 2 else ""
        records.append(dict(num=number, name=nice(names[code]), class_num=class_num,
                            class_name=class_name, section_num=section_num,
                            section_name=section_name, subsection=subsection,
                            words=words[code]))

    # pair consecutive heads inside a sub-section
    groups = {}
    run = []
    for rec in records:
        key = (rec["class_num"], rec["section_num"], rec["subsection"])
        if run and (key != run[0][0] or len(run) == 2):
            for _, r in run:
                groups[r["num"]] = [x["num"] for _, x in run]
            run = []
        run.append((key, rec))
    for _, r in run:
        groups[r["num"]] = [x["num"] for _, x in run]

    out = []
    cur = {}
    for rec in records:
        if cur.get("class") != rec["class_num"]:
            out.append(f"#class {rec['class_num']} | {rec['class_name']}")
            cur = {"class": rec["class_num"]}
        if cur.get("section") != rec["section_num"]:
            out.append(f"#section {rec['section_num']} | {rec['section_name']}")
            cur["section"] = rec["section_num"]
            cur.pop("subsection", None)
            cur.pop("group", None)
        if cur.get("subsection") != rec["subsection"]:
            out.append(f"#subsection {rec['subsection']}".rstrip())
            cur["subsection"] = rec["subsection"]
            cur.pop("group", None)
        group = groups[rec["num"]]
        if cur.get("group") != group:
            out.append("#headgroup " + ",".join(str(g) for g in group))
            cur["group"] = group
        out.append(f"#head {rec['num']} | {rec['name']}")

        by_pos = {p: [] for p in POS_ORDER}
        seen = set()
        for w in sorted(rec["words"], key=str.lower):
            w = " ".join(w.replace("|", " ").replace(";", " ").split())
            if not w or w.lower() in seen:
                continue
            seen.add(w.lower())
            by_pos[guess_pos(w.lower())].append(w)
        for pos in POS_ORDER:
            block = by_pos[pos]
            if not block:
                continue
            keyword = block[0]
            if pos == "N.":
                for w in block:
                    if w.lower() == rec["name"].lower():
                        keyword = w
                        break
            block.remove(keyword)
            block.insert(0, keyword)
            out.append(f"#pos {pos}")
            out.append(f"#para {keyword}")
            for i in range(0, len(block), GROUP_SIZE):
                out.append("; ".join(block[i:i + GROUP_SIZE]))
    Path(dst).write_text("\n".join(out) + "\n", encoding="utf-8")


if __name__ == "__main__":
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    main(sys.argv[1], sys.argv[2])
