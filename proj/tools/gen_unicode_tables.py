#!/usr/bin/env python3
"""Regenerates src/unicode_tables.inc from the Python unicodedata database.

The tables drive transcript normalization: punctuation stripping (general
categories P*), whitespace splitting, and simple lowercasing. Multi-codepoint
lowerings (e.g. U+0130) go into a small expansion table.
"""

import sys
import unicodedata

MAX_CP = 0x110000


def ranges(predicate):
    out = []
    start = None
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            ok = False
        else:
            ok = predicate(chr(cp))
        if ok and start is None:
            start = cp
        elif not ok and start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, MAX_CP - 1))
    return out


def main():
    punct = ranges(lambda ch: unicodedata.category(ch).startswith("P"))
    space = ranges(lambda ch: ch.isspace())

    lower_pairs = []
    lower_expansions = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        ch = chr(cp)
        lo = ch.lower()
        if lo == ch:
            continue
        if len(lo) == 1:
            lower_pairs.append((cp, ord(lo[0])))
        elif len(lo) <= 3:
            lower_expansions.append((cp, [ord(c) for c in lo]))

    w = sys.stdout.write
    w("// Generated by tools/gen_unicode_tables.py (Unicode %s). Do not edit.\n"
      % unicodedata.unidata_version)
    w("\nstruct CpRange { char32_t lo; char32_t hi; };\n")
    w("struct LowerPair { char32_t cp; char32_t lower; };\n")
    w("struct LowerExpansion { char32_t cp; char32_t out[3]; };\n")

    def emit_ranges(name, rs):
        w("\nstatic const CpRange %s[] = {\n" % name)
        for i in range(0, len(rs), 4):
            row = ", ".join("{0x%X, 0x%X}" % r for r in rs[i:i + 4])
            w("    %s,\n" % row)
        w("};\n")

    emit_ranges("kPunctRanges", punct)
    emit_ranges("kSpaceRanges", space)

    w("\nstatic const LowerPair kLowerMap[] = {\n")
    for i in range(0, len(lower_pairs), 4):
        row = ", ".join("{0x%X, 0x%X}" % p for p in lower_pairs[i:i + 4])
        w("    %s,\n" % row)
    w("};\n")

    w("\nstatic const LowerExpansion kLowerExpansions[] = {\n")
    for cp, out in lower_expansions:
        padded = out + [0] * (3 - len(out))
        w("    {0x%X, {0x%X, 0x%X, 0x%X}},\n" % (cp, *padded))
    w("};\n")


if __name__ == "__main__":
    main()
