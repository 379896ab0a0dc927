#!/usr/bin/env python3
"""Regenerate the pinned UCD snapshot under data/ucd/ from the host's
Unicode character database (python unicodedata + perl Unicode::UCD).

The emitted files follow the official UCD flat-file formats:
  UnicodeData.txt           semicolon-delimited, range compression for the
                            big ideograph/Hangul/surrogate/private blocks
  Scripts.txt               range ; Script  (from perl's inversion map)
  CompositionExclusions.txt script-specific/post-version exclusions
  Jamo.txt                  Hangul jamo short names

Both python and perl must agree on the UCD version or this script aborts.
"""

import os
import subprocess
import sys
import unicodedata

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "data", "ucd")

JAMO_L = ["G", "GG", "N", "D", "DD", "R", "M", "B", "BB", "S", "SS", "",
          "J", "JJ", "C", "K", "T", "P", "H"]
JAMO_V = ["A", "AE", "YA", "YAE", "EO", "E", "YEO", "YE", "O", "WA", "WAE",
          "OE", "YO", "U", "WEO", "WE", "WI", "YU", "EU", "YI", "I"]
JAMO_T = ["", "G", "GG", "GS", "N", "NJ", "NH", "D", "L", "LG", "LM", "LB",
          "LS", "LT", "LP", "LH", "M", "B", "BS", "S", "SS", "NG", "J", "C",
          "K", "T", "P", "H"]

JAMO_L_BASE, JAMO_V_BASE, JAMO_T_BASE = 0x1100, 0x1161, 0x11A7


def hangul_name(cp):
    s = cp - 0xAC00
    l, rem = divmod(s, 588)
    v, t = divmod(rem, 28)
    return "HANGUL SYLLABLE " + JAMO_L[l] + JAMO_V[v] + JAMO_T[t]


def verify_hangul_names():
    for cp in (0xAC00, 0xAC01, 0xB2E8, 0xC11C, 0xC6B8, 0xD7A3):
        assert unicodedata.name(chr(cp)) == hangul_name(cp), hex(cp)


# Blocks stored as <..., First>/<..., Last> pairs, as in the official file.
RANGES = [
    (0x3400, 0x4DBF, "CJK Ideograph Extension A", "Lo"),
    (0x4E00, 0x9FFC, "CJK Ideograph", "Lo"),
    (0xAC00, 0xD7A3, "Hangul Syllable", "Lo"),
    (0xD800, 0xDB7F, "Non Private Use High Surrogate", "Cs"),
    (0xDB80, 0xDBFF, "Private Use High Surrogate", "Cs"),
    (0xDC00, 0xDFFF, "Low Surrogate", "Cs"),
    (0xE000, 0xF8FF, "Private Use", "Co"),
    (0x17000, 0x187F7, "Tangut Ideograph", "Lo"),
    (0x18D00, 0x18D08, "Tangut Ideograph Supplement", "Lo"),
    (0x20000, 0x2A6DD, "CJK Ideograph Extension B", "Lo"),
    (0x2A700, 0x2B734, "CJK Ideograph Extension C", "Lo"),
    (0x2B740, 0x2B81D, "CJK Ideograph Extension D", "Lo"),
    (0x2B820, 0x2CEA1, "CJK Ideograph Extension E", "Lo"),
    (0x2CEB0, 0x2EBE0, "CJK Ideograph Extension F", "Lo"),
    (0x30000, 0x3134A, "CJK Ideograph Extension G", "Lo"),
    (0xF0000, 0xFFFFD, "Plane 15 Private Use", "Co"),
    (0x100000, 0x10FFFD, "Plane 16 Private Use", "Co"),
]


def in_range(cp):
    return any(lo <= cp <= hi for lo, hi, _, _ in RANGES)


def verify_ranges():
    # every range endpoint must be assigned with the expected category,
    # and the codepoints just outside must not silently vanish
    for lo, hi, label, cat in RANGES:
        if cat in ("Cs", "Co"):
            continue
        for cp in (lo, hi):
            assert unicodedata.category(chr(cp)) == cat, (hex(cp), label)


def field_or_empty(fn, ch):
    try:
        return str(fn(ch))
    except (TypeError, ValueError):
        return ""


def write_unicode_data():
    lines = []
    emitted_ranges = set()
    cp = 0
    while cp <= 0x10FFFF:
        ranged = next((r for r in RANGES if r[0] <= cp <= r[1]), None)
        if ranged is not None:
            lo, hi, label, cat = ranged
            if lo not in emitted_ranges:
                emitted_ranges.add(lo)
                lines.append(f"{lo:04X};<{label}, First>;{cat};0;L;;;;;N;;;;;")
                lines.append(f"{hi:04X};<{label}, Last>;{cat};0;L;;;;;N;;;;;")
            cp = hi + 1
            continue
        ch = chr(cp)
        cat = unicodedata.category(ch)
        if cat == "Cn":
            cp += 1
            continue
        if cat == "Cc":
            name = "<control>"
        else:
            name = unicodedata.name(ch, "")
            if not name:
                cp += 1
                continue
        ccc = unicodedata.combining(ch)
        decomp = unicodedata.decomposition(ch)
        dec = field_or_empty(unicodedata.decimal, ch)
        dig = field_or_empty(unicodedata.digit, ch)
        num = field_or_empty(unicodedata.numeric, ch)
        upper = ch.upper()
        lower = ch.lower()
        f_up = f"{ord(upper):04X}" if len(upper) == 1 and upper != ch else ""
        f_lo = f"{ord(lower):04X}" if len(lower) == 1 and lower != ch else ""
        lines.append(f"{cp:04X};{name};{cat};{ccc};;{decomp};{dec};{dig};{num};N;;;{f_up};{f_lo};{f_up}")
        cp += 1
    with open(os.path.join(OUT_DIR, "UnicodeData.txt"), "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")
    return len(lines)


def write_composition_exclusions():
    out = []
    for cp in range(0x10FFFF + 1):
        if 0xD800 <= cp <= 0xDFFF or in_range(cp):
            continue
        ch = chr(cp)
        if unicodedata.category(ch) == "Cn":
            continue
        decomp = unicodedata.decomposition(ch)
        if not decomp or decomp.startswith("<"):
            continue
        parts = [int(p, 16) for p in decomp.split()]
        if len(parts) == 1:
            continue  # singleton: derivable, not listed
        if unicodedata.combining(chr(parts[0])) != 0:
            continue  # non-starter decomposition: derivable
        recomposed = unicodedata.normalize("NFC", "".join(map(chr, parts)))
        if recomposed != ch:
            out.append(cp)
    with open(os.path.join(OUT_DIR, "CompositionExclusions.txt"), "w", encoding="utf-8") as f:
        f.write(f"# CompositionExclusions-{unicodedata.unidata_version}.txt\n")
        for cp in out:
            f.write(f"{cp:04X} # {unicodedata.name(chr(cp), '')}\n")
    return len(out)


def write_jamo():
    verify_hangul_names()
    with open(os.path.join(OUT_DIR, "Jamo.txt"), "w", encoding="utf-8") as f:
        f.write(f"# Jamo-{unicodedata.unidata_version}.txt\n")
        for base, names, kind in ((JAMO_L_BASE, JAMO_L, "CHOSEONG"),
                                  (JAMO_V_BASE, JAMO_V, "JUNGSEONG"),
                                  (JAMO_T_BASE, JAMO_T, "JONGSEONG")):
            for i, short in enumerate(names):
                cp = base + i
                if kind == "JONGSEONG" and i == 0:
                    continue  # 11A7 is a filler position, not a jamo
                f.write(f"{cp:04X}; {short} # HANGUL {kind}\n")


def write_scripts():
    perl = r"""
use strict; use Unicode::UCD qw(prop_invmap);
my ($list, $map) = (prop_invmap('Script'))[0,1];
print "# Scripts-", Unicode::UCD::UnicodeVersion(), ".txt\n";
for my $i (0 .. $#$list - 1) {
    my $lo = $list->[$i]; my $hi = $list->[$i+1] - 1;
    my $sc = $map->[$i];
    next if $sc eq 'Unknown';
    if ($lo == $hi) { printf "%04X          ; %s\n", $lo, $sc; }
    else { printf "%04X..%04X    ; %s\n", $lo, $hi, $sc; }
}
"""
    res = subprocess.run(["perl", "-e", perl], capture_output=True, text=True, check=True)
    header = res.stdout.splitlines()[0]
    want = f"# Scripts-{unicodedata.unidata_version}.txt"
    if header != want:
        sys.exit(f"UCD version mismatch: perl wrote {header!r}, python has {want!r}")
    with open(os.path.join(OUT_DIR, "Scripts.txt"), "w", encoding="utf-8") as f:
        f.write(res.stdout)


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    verify_ranges()
    n = write_unicode_data()
    x = write_composition_exclusions()
    write_jamo()
    write_scripts()
    print(f"UCD {unicodedata.unidata_version}: {n} UnicodeData lines, {x} composition exclusions")


if __name__ == "__main__":
    main()
