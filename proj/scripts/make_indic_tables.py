#!/usr/bin/env python3
"""Regenerate the Devanagari mapping data:
  data/tables/uroman_devanagari.tsv  ASCII table (abugida handling in engine)
  schemes/iso15919.rules             ISO 15919 rewrite rules
Both derive from the same consonant/vowel lists.
"""

import os

ROOT = os.path.join(os.path.dirname(__file__), "..")

# consonant, ascii stem+a, iso 15919 stem+a
CONSONANTS = [
    ("क", "ka", "ka"), ("ख", "kha", "kha"), ("ग", "ga", "ga"), ("घ", "gha", "gha"),
    ("ङ", "nga", "ṅa"), ("च", "cha", "ca"), ("छ", "chha", "cha"),
    ("ज", "ja", "ja"), ("झ", "jha", "jha"), ("ञ", "nya", "ña"),
    ("ट", "ta", "ṭa"), ("ठ", "tha", "ṭha"), ("ड", "da", "ḍa"),
    ("ढ", "dha", "ḍha"), ("ण", "na", "ṇa"),
    ("त", "ta", "ta"), ("थ", "tha", "tha"), ("द", "da", "da"), ("ध", "dha", "dha"),
    ("न", "na", "na"), ("प", "pa", "pa"), ("फ", "pha", "pha"), ("ब", "ba", "ba"),
    ("भ", "bha", "bha"), ("म", "ma", "ma"), ("य", "ya", "ya"), ("र", "ra", "ra"),
    ("ल", "la", "la"), ("ळ", "la", "ḷa"), ("व", "va", "va"),
    ("श", "sha", "śa"), ("ष", "ssa", "ṣa"), ("स", "sa", "sa"), ("ह", "ha", "ha"),
]

# nukta letters are stored decomposed after NFKC (composition exclusions),
# so the match keys are built as base consonant + U+093C
NUKTA = [
    ("क़", "qa", "qa"), ("ख़", "kha", "k͟ha"), ("ग़", "ga", "ġa"),
    ("ज़", "za", "za"), ("ड़", "ra", "ṛa"), ("ढ़", "rha", "ṛha"),
    ("फ़", "fa", "fa"), ("य़", "ya", "ẏa"),
]

# independent vowel, ascii, iso
VOWELS = [
    ("अ", "a", "a"), ("आ", "aa", "ā"), ("इ", "i", "i"), ("ई", "ii", "ī"),
    ("उ", "u", "u"), ("ऊ", "uu", "ū"), ("ऋ", "ri", "r̥"),
    ("ॠ", "rii", "r̥̄"), ("ऌ", "li", "l̥"), ("ॡ", "lii", "l̥̄"),
    ("ए", "e", "ē"), ("ऐ", "ai", "ai"), ("ओ", "o", "ō"), ("औ", "au", "au"),
    ("ऍ", "e", "ê"), ("ऑ", "o", "ô"),
]

# dependent vowel sign, ascii, iso
MATRAS = [
    ("ा", "aa", "ā"), ("ि", "i", "i"), ("ी", "ii", "ī"),
    ("ु", "u", "u"), ("ू", "uu", "ū"), ("ृ", "ri", "r̥"),
    ("ॄ", "rii", "r̥̄"), ("ॢ", "li", "l̥"), ("ॣ", "lii", "l̥̄"),
    ("े", "e", "ē"), ("ै", "ai", "ai"), ("ो", "o", "ō"), ("ौ", "au", "au"),
    ("ॅ", "e", "ê"), ("ॉ", "o", "ô"),
]

SIGNS = [
    ("ं", "m", None),            # anusvara: iso side is context sensitive
    ("ः", "h", "ḥ"),
    ("ँ", "m", "m̐"),
    ("।", ".", "."),
    ("॥", ".", "."),
    ("ऽ", "'", "’"),
    ("ॐ", "om", "ōṁ"),
    ("॰", ".", "."),
]

DIGITS = [("०", "0"), ("१", "1"), ("२", "2"), ("३", "3"), ("४", "4"),
          ("५", "5"), ("६", "6"), ("७", "7"), ("८", "8"), ("९", "9")]

VIRAMA = "्"
NUKTA_SIGN = "़"

ANUSVARA_CONTEXT = [
    ("कखगघङ", "ṅ"),
    ("चछजझञ", "ñ"),
    ("टठडढण", "ṇ"),
    ("तथदधन", "n"),
    ("पफबभम", "m"),
]


def hexkey(s):
    return " ".join(f"{ord(c):04X}" for c in s)


def write_uroman_table():
    path = os.path.join(ROOT, "data", "tables", "uroman_devanagari.tsv")
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write("# devanagari -> ascii; consonant entries carry the inherent vowel\n")
        for deva, ascii_val, _ in CONSONANTS + NUKTA + VOWELS + MATRAS:
            f.write(f"{hexkey(deva)}\t{ascii_val}\tscript\t# {deva}\n")
        for deva, ascii_val, _ in SIGNS:
            f.write(f"{hexkey(deva)}\t{ascii_val}\tscript\t# {deva}\n")
        for deva, ascii_val in DIGITS:
            f.write(f"{hexkey(deva)}\t{ascii_val}\tscript\t# {deva}\n")
        f.write(f"{hexkey(VIRAMA)}\t\tscript\t# virama\n")
        f.write(f"{hexkey(NUKTA_SIGN)}\t\tscript\t# nukta\n")
        f.write(f"{hexkey(chr(0x0951))}\t\tscript\t# udatta\n")
        f.write(f"{hexkey(chr(0x0952))}\t\tscript\t# anudatta\n")


def write_iso15919_rules():
    path = os.path.join(ROOT, "schemes", "iso15919.rules")
    os.makedirs(os.path.dirname(path), exist_ok=True)
    sign_class = "".join(m for m, _, _ in MATRAS) + VIRAMA + NUKTA_SIGN
    with open(path, "w", encoding="utf-8") as f:
        f.write("# ISO 15919 transliteration of Devanagari.\n")
        f.write("# grammar: [pre] | match | [post] -> replacement @priority\n\n")
        f.write("# consonants: bare before a vowel sign or virama, inherent a otherwise\n")
        for deva, _, iso in CONSONANTS + NUKTA:
            stem = iso[:-1]
            f.write(f"| {deva} | [{sign_class}] -> {stem} @10\n")
            f.write(f"{deva} -> {iso}\n")
        f.write("\n# vowel signs and independent vowels\n")
        for deva, _, iso in MATRAS + VOWELS:
            f.write(f"{deva} -> {iso}\n")
        f.write(f"{VIRAMA} -> \n")
        f.write(f"{NUKTA_SIGN} -> \n")
        f.write("\n# anusvara assimilates to the class of the following stop\n")
        prio = 25
        for members, nasal in ANUSVARA_CONTEXT:
            f.write(f"| ं | [{members}] -> {nasal} @{prio}\n")
            prio -= 1
        f.write("ं -> ṁ\n")
        f.write("\n# other signs\n")
        for deva, _, iso in SIGNS:
            if iso is None:
                continue
            f.write(f"{deva} -> {iso}\n")
        for deva, val in DIGITS:
            f.write(f"{deva} -> {val}\n")
        f.write("\\u0951 -> \n")
        f.write("\\u0952 -> \n")
        f.write("\\u200C -> \n")
        f.write("\\u200D -> \n")


def main():
    write_uroman_table()
    write_iso15919_rules()
    print("devanagari tables written")


if __name__ == "__main__":
    main()
