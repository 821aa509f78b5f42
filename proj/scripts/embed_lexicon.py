#!/usr/bin/env python3
"""Embed data/lexicon.tsv as the built-in lexicon header.

usage: embed_lexicon.py data/lexicon.tsv include/assertlint/detail/default_lexicon.hpp
"""
import sys
from pathlib import Path

TAB_ESCAPE = "\\t"
NEWLINE_ESCAPE = "\\n"

src = Path(sys.argv[1]).read_text(encoding="utf-8")
rows = []
for line in src.splitlines():
    if not line or line.startswith("#"):
        continue
    rows.append('    "' + line.replace("\t", TAB_ESCAPE) + NEWLINE_ESCAPE + '"\n')

Path(sys.argv[2]).write_text(
    "// Generated by scripts/embed_lexicon.py from data/lexicon.tsv. Do not edit.\n"
    "#pragma once\n\n"
    "#include <string_view>\n\n"
    "namespace assertlint::detail {\n\n"
    "inline constexpr std::string_view kDefaultLexicon =\n"
    + "".join(rows)
    + "    ;\n\n}  // namespace assertlint::detail\n",
    encoding="utf-8",
)
