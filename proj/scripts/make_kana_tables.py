#!/usr/bin/env python3
"""Regenerate the kana mapping data:
  data/tables/uroman_kana.tsv   ASCII kana table (incl. sokuon clusters)
  schemes/hepburn.rules         Hepburn rewrite rules with context handling
Both files derive from the same row list so they cannot drift apart.
"""

import os

ROOT = os.path.join(os.path.dirname(__file__), "..")

BASE = [
    ("あ", "a"), ("い", "i"), ("う", "u"), ("え", "e"), ("お", "o"),
    ("か", "ka"), ("き", "ki"), ("く", "ku"), ("け", "ke"), ("こ", "ko"),
    ("が", "ga"), ("ぎ", "gi"), ("ぐ", "gu"), ("げ", "ge"), ("ご", "go"),
    ("さ", "sa"), ("し", "shi"), ("す", "su"), ("せ", "se"), ("そ", "so"),
    ("ざ", "za"), ("じ", "ji"), ("ず", "zu"), ("ぜ", "ze"), ("ぞ", "zo"),
    ("た", "ta"), ("ち", "chi"), ("つ", "tsu"), ("て", "te"), ("と", "to"),
    ("だ", "da"), ("ぢ", "ji"), ("づ", "zu"), ("で", "de"), ("ど", "do"),
    ("な", "na"), ("に", "ni"), ("ぬ", "nu"), ("ね", "ne"), ("の", "no"),
    ("は", "ha"), ("ひ", "hi"), ("ふ", "fu"), ("へ", "he"), ("ほ", "ho"),
    ("ば", "ba"), ("び", "bi"), ("ぶ", "bu"), ("べ", "be"), ("ぼ", "bo"),
    ("ぱ", "pa"), ("ぴ", "pi"), ("ぷ", "pu"), ("ぺ", "pe"), ("ぽ", "po"),
    ("ま", "ma"), ("み", "mi"), ("む", "mu"), ("め", "me"), ("も", "mo"),
    ("や", "ya"), ("ゆ", "yu"), ("よ", "yo"),
    ("ら", "ra"), ("り", "ri"), ("る", "ru"), ("れ", "re"), ("ろ", "ro"),
    ("わ", "wa"), ("ゐ", "wi"), ("ゑ", "we"),
    ("ゔ", "vu"), ("ゕ", "ka"), ("ゖ", "ke"),
    ("ぁ", "a"), ("ぃ", "i"), ("ぅ", "u"), ("ぇ", "e"), ("ぉ", "o"),
    ("ゃ", "ya"), ("ゅ", "yu"), ("ょ", "yo"), ("ゎ", "wa"),
]

DIGRAPHS = [
    ("きゃ", "kya"), ("きゅ", "kyu"), ("きょ", "kyo"),
    ("ぎゃ", "gya"), ("ぎゅ", "gyu"), ("ぎょ", "gyo"),
    ("しゃ", "sha"), ("しゅ", "shu"), ("しょ", "sho"),
    ("じゃ", "ja"), ("じゅ", "ju"), ("じょ", "jo"),
    ("ちゃ", "cha"), ("ちゅ", "chu"), ("ちょ", "cho"),
    ("ぢゃ", "ja"), ("ぢゅ", "ju"), ("ぢょ", "jo"),
    ("にゃ", "nya"), ("にゅ", "nyu"), ("にょ", "nyo"),
    ("ひゃ", "hya"), ("ひゅ", "hyu"), ("ひょ", "hyo"),
    ("びゃ", "bya"), ("びゅ", "byu"), ("びょ", "byo"),
    ("ぴゃ", "pya"), ("ぴゅ", "pyu"), ("ぴょ", "pyo"),
    ("みゃ", "mya"), ("みゅ", "myu"), ("みょ", "myo"),
    ("りゃ", "rya"), ("りゅ", "ryu"), ("りょ", "ryo"),
]

# katakana-only cluster spellings for loanword sounds
KATAKANA_EXTRA = [
    ("ヴァ", "va"), ("ヴィ", "vi"), ("ヴェ", "ve"), ("ヴォ", "vo"),
    ("ファ", "fa"), ("フィ", "fi"), ("フェ", "fe"), ("フォ", "fo"),
    ("ティ", "ti"), ("ディ", "di"), ("トゥ", "tu"), ("ドゥ", "du"),
    ("ウィ", "wi"), ("ウェ", "we"), ("ウォ", "wo"),
    ("シェ", "she"), ("ジェ", "je"), ("チェ", "che"),
    ("ツァ", "tsa"), ("ツィ", "tsi"), ("ツェ", "tse"), ("ツォ", "tso"),
    ("イェ", "ye"),
]

SOKUON = "っ"
ITERATION = ["ゝ", "ゞ", "ヽ", "ヾ"]
PROLONGED = "ー"


def to_katakana(s):
    return "".join(chr(ord(c) + 0x60) if 0x3041 <= ord(c) <= 0x3096 else c for c in s)


def all_rows():
    rows = []
    for kana, romaji in BASE + DIGRAPHS:
        rows.append((kana, romaji))
        rows.append((to_katakana(kana), romaji))
    rows += KATAKANA_EXTRA
    rows.append(("を", "wo"))
    rows.append(("ヲ", "wo"))
    rows.append(("ん", "n"))
    rows.append(("ン", "n"))
    return rows


def doubled(romaji):
    head = "t" if romaji.startswith("ch") else romaji[0]
    return head + romaji


def write_uroman_table():
    path = os.path.join(ROOT, "data", "tables", "uroman_kana.tsv")
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write("# kana -> ascii romaji (Hepburn without macrons)\n")
        f.write("# <hex codepoints, space-joined>\\t<ascii>\\t<tier>\n")
        for kana, romaji in all_rows():
            key = " ".join(f"{ord(c):04X}" for c in kana)
            f.write(f"{key}\t{romaji}\tscript\t# {kana}\n")
        f.write("# sokuon clusters (consonant doubling)\n")
        for kana, romaji in all_rows():
            if romaji[0] in "aiueonywv" or kana[0] in "んンを":
                continue
            for sok in (SOKUON, to_katakana(SOKUON)):
                cluster = sok + kana
                key = " ".join(f"{ord(c):04X}" for c in cluster)
                f.write(f"{key}\t{doubled(romaji)}\tscript\t# {cluster}\n")
        f.write("# bare sokuon, prolonged mark and iteration marks carry no segment\n")
        for kana in [SOKUON, to_katakana(SOKUON), PROLONGED] + ITERATION:
            key = " ".join(f"{ord(c):04X}" for c in kana)
            f.write(f"{key}\t\tscript\t# {kana}\n")


def write_hepburn_rules():
    path = os.path.join(ROOT, "schemes", "hepburn.rules")
    os.makedirs(os.path.dirname(path), exist_ok=True)
    rows = all_rows()
    with open(path, "w", encoding="utf-8") as f:
        f.write("# Hepburn romanization of kana.\n")
        f.write("# grammar: [pre] | match | [post] -> replacement @priority\n\n")
        for kana, romaji in rows:
            if kana in ("を", "ヲ"):
                romaji = "o"
            f.write(f"{kana} -> {romaji}\n")
        f.write("\n# prolonged sound mark lengthens the preceding vowel\n")
        f.write(f"{PROLONGED} -> \\u0304\n")
        f.write("\n# syllabic n splits from a following vowel or y\n")
        vowel_class = "あいうえおやゆよアイウエオヤユヨ"
        f.write(f"| ん | [{vowel_class}] -> n' @5\n")
        f.write(f"| ン | [{vowel_class}] -> n' @5\n")
        f.write("\n# sokuon doubles the next consonant\n")
        classes = {}
        for kana, romaji in rows:
            if romaji[0] in "aiueonywv" or kana[0] in "んンを":
                continue
            head = "t" if romaji.startswith("ch") else romaji[0]
            classes.setdefault(head, set()).add(kana[0])
        for head in sorted(classes):
            members = "".join(sorted(classes[head]))
            f.write(f"| っ | [{members}] -> {head} @5\n")
            f.write(f"| ッ | [{members}] -> {head} @5\n")
        f.write("っ -> \n")
        f.write("ッ -> \n")
        f.write(f"\n# punctuation\n")
        f.write("。 -> .\n")
        f.write("、 -> ,\\s\n")
        f.write("「 -> \"\n")
        f.write("」 -> \"\n")
        f.write("『 -> \"\n")
        f.write("』 -> \"\n")
        f.write("\\u00B7 -> \\s\n")


def main():
    write_uroman_table()
    write_hepburn_rules()
    print("kana tables written")


if __name__ == "__main__":
    main()
