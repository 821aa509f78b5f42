#!/usr/bin/env python3
"""Regenerate data/lexicon.tsv from the Brill tagger lexicon.

The Brill lexicon (MIT licensed, distributed with TextBlob as
textblob/en/en-lexicon.txt) gives one primary Penn Treebank tag per word.
Words are ranked by frequency using textblob/en/en-spelling.txt and the
most frequent LIMIT entries are kept, mapped onto the condensed tagset.

usage: build_lexicon.py <textblob/en dir> <out.tsv> [LIMIT]
"""
import sys
from pathlib import Path

PENN = {
    "NN": "Noun-singular", "NNS": "Noun-plural", "NNP": "Proper-noun", "NNPS": "Proper-noun",
    "JJ": "Adjective", "JJR": "Adjective", "JJS": "Adjective",
    "VB": "Verb-base", "VBP": "Verb-base", "VBG": "Verb-base", "VBD": "Verb-past",
    "VBN": "Verb-past-participle", "VBZ": "Verb-3rd",
    "RB": "Adverb", "RBR": "Adverb", "RBS": "Adverb", "WRB": "Adverb",
    "DT": "Determiner", "WDT": "Determiner", "PDT": "Determiner",
    "IN": "Preposition", "TO": "Preposition", "RP": "Preposition",
    "MD": "Modal", "PRP": "Pronoun", "PRP$": "Pronoun", "WP": "Pronoun", "WP$": "Pronoun", "EX": "Pronoun",
    "CC": "Conjunction", "CD": "Number",
}

# Words whose general-English primary tag is wrong for test-code prose.
OVERRIDES = {
    "file": "Noun-singular", "key": "Noun-singular", "set": "Noun-singular", "id": "Noun-singular",
    "node": "Noun-singular", "config": "Noun-singular", "match": "Noun-singular",
    "test": "Noun-singular", "array": "Noun-singular", "map": "Noun-singular",
    "timeout": "Noun-singular", "thread": "Noun-singular", "socket": "Noun-singular",
    "stream": "Noun-singular", "cache": "Noun-singular", "query": "Noun-singular",
    "token": "Noun-singular", "url": "Noun-singular", "uri": "Noun-singular",
    "json": "Noun-singular", "xml": "Noun-singular", "schema": "Noun-singular",
    "metadata": "Noun-singular", "boolean": "Noun-singular", "integer": "Noun-singular",
    "iterator": "Noun-singular", "callback": "Noun-singular", "handler": "Noun-singular",
    "listener": "Noun-singular", "instance": "Noun-singular", "constructor": "Noun-singular",
    "serialization": "Noun-singular", "deserialization": "Noun-singular",
    "serialized": "Verb-past-participle", "deserialized": "Verb-past-participle",
    "interpolated": "Verb-past-participle", "unexpected": "Adjective",
    "null": "Adjective", "empty": "Adjective", "invalid": "Adjective",
}


def main() -> None:
    src = Path(sys.argv[1])
    out = Path(sys.argv[2])
    limit = int(sys.argv[3]) if len(sys.argv) > 3 else 10000

    brill = {}
    for line in (src / "en-lexicon.txt").read_text(encoding="utf-8").splitlines():
        if line.startswith(";;;") or not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            continue
        word, tag = parts
        if word.isalpha() and word.islower() and word not in brill and tag in PENN:
            brill[word] = PENN[tag]

    freq = []
    for line in (src / "en-spelling.txt").read_text(encoding="utf-8").splitlines():
        if line.startswith(";;;") or not line.strip():
            continue
        word, count = line.split()
        if word in brill:
            freq.append((-int(count), word))
    freq.sort()

    chosen = {w: brill[w] for _, w in freq[:limit]}
    chosen.update(OVERRIDES)

    lines = [
        "# assertlint part-of-speech lexicon, version 1",
        "# word<TAB>tag; derived from the Brill tagger lexicon (MIT license,",
        "# Copyright 1993 MIT and University of Pennsylvania), frequency-ranked.",
    ]
    lines += [f"{w}\t{t}" for w, t in sorted(chosen.items())]
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
