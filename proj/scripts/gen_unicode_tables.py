#!/usr/bin/env python3
"""Generate include/negeval/unicode_tables.hpp from the Python unicodedata
database: canonical (NFD) decompositions, nonzero combining classes, and
primary composition pairs. Hangul syllables are handled algorithmically in
C++ and excluded here."""

import sys
import unicodedata

HANGUL_BASE = 0xAC00
HANGUL_END = 0xD7A3


def is_hangul(cp: int) -> bool:
    return HANGUL_BASE <= cp <= HANGUL_END


def main(out_path: str) -> None:
    decomp_index = []  # (cp, offset, len)
    decomp_data = []
    ccc = []  # (cp, class)
    comp = []  # (first, second, composed)

    for cp in range(0x110000):
        ch = chr(cp)
        k = unicodedata.combining(ch)
        if k:
            ccc.append((cp, k))
        if is_hangul(cp):
            continue
        nfd = unicodedata.normalize("NFD", ch)
        if nfd != ch:
            cps = [ord(c) for c in nfd]
            decomp_index.append((cp, len(decomp_data), len(cps)))
            decomp_data.extend(cps)
        raw = unicodedata.decomposition(ch)
        if raw and not raw.startswith("<"):
            parts = [int(p, 16) for p in raw.split()]
            if len(parts) == 2:
                # valid primary composite iff NFC recomposes it (this
                # honors the composition exclusions)
                if unicodedata.normalize("NFC", nfd) == ch:
                    comp.append((parts[0], parts[1], cp))

    comp.sort()

    with open(out_path, "w") as f:
        w = f.write
        w("// Generated by scripts/gen_unicode_tables.py (UCD %s). Do not edit.\n"
          % unicodedata.unidata_version)
        w("#pragma once\n\n#include <cstdint>\n\nnamespace negeval::unicode {\n\n")

        w("struct DecompEntry { char32_t cp; std::uint32_t offset; std::uint8_t len; };\n")
        w("struct CccEntry { char32_t cp; std::uint8_t ccc; };\n")
        w("struct CompEntry { char32_t first; char32_t second; char32_t composed; };\n\n")

        w("inline constexpr char32_t kDecompData[] = {\n")
        for i in range(0, len(decomp_data), 12):
            w("    " + ",".join("0x%X" % c for c in decomp_data[i:i + 12]) + ",\n")
        w("};\n\n")

        w("inline constexpr DecompEntry kDecompIndex[] = {\n")
        for cp, off, n in decomp_index:
            w("    {0x%X,%d,%d},\n" % (cp, off, n))
        w("};\n\n")

        w("inline constexpr CccEntry kCccTable[] = {\n")
        for cp, k in ccc:
            w("    {0x%X,%d},\n" % (cp, k))
        w("};\n\n")

        w("inline constexpr CompEntry kCompTable[] = {\n")
        for a, b, c in comp:
            w("    {0x%X,0x%X,0x%X},\n" % (a, b, c))
        w("};\n\n")
        w("} // namespace negeval::unicode\n")

    sys.stderr.write(
        "decomp entries: %d (data %d), ccc: %d, comp pairs: %d\n"
        % (len(decomp_index), len(decomp_data), len(ccc), len(comp)))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/negeval/unicode_tables.hpp")
