#!/usr/bin/env python3
"""Emit normalization test vectors computed with the host Unicode library.

Output: tests/data/norm_vectors.tsv with \\u-escaped columns
    input <TAB> nfc <TAB> nfkc <TAB> nfkd <TAB> stripped
where `stripped` is NFKD minus Mn marks, recomposed to NFC.
"""

import os
import random
import unicodedata

OUT = os.path.join(os.path.dirname(__file__), "..", "tests", "data", "norm_vectors.tsv")

FIXED = [
    "",
    "abc",
    "café",
    "café",
    "tiếng Việt",
    "tiếng Việt",
    "ž",
    "ž",
    "ｱﾞ",          # halfwidth katakana + voiced mark
    "が",          # ka + combining voiced mark -> ga
    "㉿㍿㏂",    # squared compat chars
    "ﷺ",                # Arabic ligature with long compat expansion
    "क़ख़",          # composition-excluded Devanagari
    "ṩ",                # s with dot below and dot above
    "ṩ",
    "ṩ",
    "가힣서울",  # Hangul syllables
    "각",        # jamo sequence -> composes
    "q̣̇x",
    "ĲǄⅣ",        # IJ, DZ with caron, roman numeral
    "½…①",
    "ＡＢＣ",
    "أحرارًا",
    "Жж",
    "क़ी",
    "ごゝゞ",
    "ÅΩ",              # angstrom sign, ohm sign (singletons)
    "̈́",                    # dialytika tonos (excluded decomposition)
    "ḍ̇",
    "ą́b",
]

POOLS = [
    (0x0020, 0x007E),
    (0x00C0, 0x024F),
    (0x0300, 0x036F),
    (0x0370, 0x03FF),
    (0x0400, 0x04FF),
    (0x0590, 0x05F4),
    (0x0620, 0x0655),
    (0x0900, 0x097F),
    (0x3040, 0x30FF),
    (0x4E00, 0x4F00),
    (0xAC00, 0xAD00),
    (0xFF00, 0xFFEF),
    (0x1E00, 0x1EFF),
]


def esc(s):
    return "".join(
        c if 0x20 <= ord(c) < 0x7F and c not in "\\\t" else "\\u{%X}" % ord(c)
        for c in s)


def random_string(rng):
    n = rng.randint(1, 24)
    out = []
    for _ in range(n):
        lo, hi = rng.choice(POOLS)
        cp = rng.randint(lo, hi)
        if unicodedata.category(chr(cp)) == "Cn" or 0xD800 <= cp <= 0xDFFF:
            continue
        out.append(chr(cp))
    return "".join(out)


def strip_marks(s):
    decomposed = unicodedata.normalize("NFKD", s)
    kept = "".join(c for c in decomposed if unicodedata.category(c) != "Mn")
    return unicodedata.normalize("NFC", kept)


def main():
    rng = random.Random(20260808)
    cases = list(FIXED) + [random_string(rng) for _ in range(400)]
    os.makedirs(os.path.dirname(OUT), exist_ok=True)
    with open(OUT, "w", encoding="utf-8") as f:
        f.write("# input\tnfc\tnfkc\tnfkd\tstripped  (UCD %s)\n" % unicodedata.unidata_version)
        for s in cases:
            f.write("\t".join([
                esc(s),
                esc(unicodedata.normalize("NFC", s)),
                esc(unicodedata.normalize("NFKC", s)),
                esc(unicodedata.normalize("NFKD", s)),
                esc(strip_marks(s)),
            ]) + "\n")
    print("wrote", len(cases), "vectors")


if __name__ == "__main__":
    main()
