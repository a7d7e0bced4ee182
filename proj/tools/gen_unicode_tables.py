#!/usr/bin/env python3
"""Regenerate include/cohesion/unicode_data.hpp from Python's unicodedata.

The header carries four tables: full canonical decompositions (NFD),
canonical combining classes, primary composition pairs, and full case
foldings, plus the code point ranges of the punctuation categories (P*).
Hangul syllables are handled algorithmically at runtime and are excluded
here.

Usage: python3 tools/gen_unicode_tables.py > include/cohesion/unicode_data.hpp
"""

import sys
import unicodedata

MAX_CP = 0x110000
HANGUL_S_BASE = 0xAC00
HANGUL_S_COUNT = 11172


def is_hangul_syllable(cp: int) -> bool:
    return HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT


def iter_codepoints():
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        yield cp


def collect():
    decomp = {}   # cp -> full canonical decomposition (tuple of cps)
    ccc = {}      # cp -> combining class (nonzero only)
    fold = {}     # cp -> full case folding (tuple of cps)
    punct = []    # cps with category P*

    for cp in iter_codepoints():
        ch = chr(cp)
        klass = unicodedata.combining(ch)
        if klass != 0:
            ccc[cp] = klass
        if not is_hangul_syllable(cp):
            nfd = unicodedata.normalize("NFD", ch)
            if nfd != ch:
                decomp[cp] = tuple(ord(c) for c in nfd)
        folded = ch.casefold()
        if folded != ch:
            fold[cp] = tuple(ord(c) for c in folded)
        if unicodedata.category(ch).startswith("P"):
            punct.append(cp)

    # Primary composites: two-element canonical decompositions that NFC
    # actually recombines (this filters the composition exclusions).
    comp = []
    for cp, seq in decomp.items():
        raw = unicodedata.decomposition(chr(cp))
        if raw and not raw.startswith("<"):
            parts = [int(p, 16) for p in raw.split()]
            if len(parts) == 2:
                a, b = parts
                if unicodedata.normalize("NFC", chr(a) + chr(b)) == chr(cp):
                    comp.append((a, b, cp))
    comp.sort()

    ranges = []
    for cp in punct:
        if ranges and ranges[-1][1] + 1 == cp:
            ranges[-1][1] = cp
        else:
            ranges.append([cp, cp])

    return decomp, ccc, comp, fold, ranges


def emit_seq_table(out, name, mapping):
    pool = []
    entries = []
    for cp in sorted(mapping):
        seq = mapping[cp]
        entries.append((cp, len(pool), len(seq)))
        pool.extend(seq)
    out.write(f"inline constexpr char32_t k{name}Pool[] = {{\n")
    for i in range(0, len(pool), 8):
        out.write("    " + ", ".join(f"0x{c:04X}" for c in pool[i:i + 8]) + ",\n")
    out.write("};\n\n")
    out.write(f"inline constexpr SeqEntry k{name}[] = {{\n")
    for cp, off, ln in entries:
        out.write(f"    {{0x{cp:04X}, {off}, {ln}}},\n")
    out.write("};\n\n")


def main():
    decomp, ccc, comp, fold, ranges = collect()
    out = sys.stdout
    out.write("// Generated by tools/gen_unicode_tables.py from Python "
              f"unicodedata {unicodedata.unidata_version}. Do not edit.\n")
    out.write("#pragma once\n\n#include <cstdint>\n\n")
    out.write("namespace cohesion::unicode_data {\n\n")
    out.write("struct SeqEntry {\n"
              "    char32_t cp;\n"
              "    std::uint32_t offset;\n"
              "    std::uint8_t length;\n"
              "};\n\n")
    out.write("struct CccEntry {\n"
              "    char32_t cp;\n"
              "    std::uint8_t ccc;\n"
              "};\n\n")
    out.write("struct CompEntry {\n"
              "    char32_t first;\n"
              "    char32_t second;\n"
              "    char32_t composite;\n"
              "};\n\n")
    out.write("struct Range {\n"
              "    char32_t lo;\n"
              "    char32_t hi;\n"
              "};\n\n")

    emit_seq_table(out, "Decomposition", decomp)

    out.write("inline constexpr CccEntry kCombiningClass[] = {\n")
    for cp in sorted(ccc):
        out.write(f"    {{0x{cp:04X}, {ccc[cp]}}},\n")
    out.write("};\n\n")

    out.write("inline constexpr CompEntry kComposition[] = {\n")
    for a, b, c in comp:
        out.write(f"    {{0x{a:04X}, 0x{b:04X}, 0x{c:04X}}},\n")
    out.write("};\n\n")

    emit_seq_table(out, "CaseFold", fold)

    out.write("inline constexpr Range kPunctuation[] = {\n")
    for lo, hi in ranges:
        out.write(f"    {{0x{lo:04X}, 0x{hi:04X}}},\n")
    out.write("};\n\n")
    out.write("}  // namespace cohesion::unicode_data\n")


if __name__ == "__main__":
    main()
