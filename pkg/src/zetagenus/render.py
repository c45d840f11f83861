"""Rendering and serialization: polynomial text, tables, and the cache.

Exact rationals always serialize as decimal strings {"num": ..., "den":
...}; floats never appear in exact outputs, since table denominators
outgrow 64-bit range quickly.  All emitted orders are deterministic
(degree ascending, partitions in the descending lexicographic order of
integer_partitions), so reruns with the same inputs are byte-identical.
"""

from __future__ import annotations

import json
import math
import sys
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .genus import CoefficientTable, GenusSpec, coefficient_table
from .partitions import IntegerPartition, integer_partitions

__all__ = [
    "render_poly_text",
    "render_poly_latex",
    "render_poly_json",
    "table_rows",
    "render_table_csv",
    "render_table_json",
    "parse_table_json",
    "read_cache",
    "write_cache",
    "tables_with_cache",
    "CSV_HEADER",
    "CACHE_VERSION",
]

CSV_HEADER = "k,partition,coefficient_num,coefficient_den,sign,r"
CACHE_VERSION = 1


def _ordered_terms(table: CoefficientTable) -> list[tuple[IntegerPartition, Fraction]]:
    return [(J, table[J]) for J in integer_partitions(table.degree)]


def _monomial_text(J: IntegerPartition) -> str:
    pieces = []
    for part, mult in sorted(J.multiplicities().items(), reverse=True):
        pieces.append(f"p{part}" if mult == 1 else f"p{part}^{mult}")
    return "*".join(pieces)


def _monomial_latex(J: IntegerPartition) -> str:
    pieces = []
    for part, mult in sorted(J.multiplicities().items(), reverse=True):
        sub = f"p_{part}" if part < 10 else f"p_{{{part}}}"
        if mult > 1:
            sub += f"^{mult}" if mult < 10 else f"^{{{mult}}}"
        pieces.append(sub)
    return " ".join(pieces)


def render_poly_text(table: Optional[CoefficientTable]) -> str:
    """Plain-text polynomial with the common denominator pulled out.

    Degree 0 (table None) renders as "1".  A single term renders as
    sign(fraction)*monomial, e.g. "-(1/24)*p1"; several terms share one
    denominator, e.g. "(7*p2 - p1^2)/45".
    """
    if table is None:
        return "1"
    terms = _ordered_terms(table)
    if len(terms) == 1:
        J, c = terms[0]
        mono = _monomial_text(J)
        sign = "-" if c < 0 else ""
        a = abs(c)
        if a == 1:
            return f"{sign}{mono}"
        if a.denominator == 1:
            return f"{sign}{a.numerator}*{mono}"
        return f"{sign}({a})*{mono}"
    den = math.lcm(*(c.denominator for _, c in terms))
    rendered = []
    for i, (J, c) in enumerate(terms):
        num = c.numerator * (den // c.denominator)
        mono = _monomial_text(J)
        body = mono if abs(num) == 1 else f"{abs(num)}*{mono}"
        if i == 0:
            rendered.append(f"-{body}" if num < 0 else body)
        else:
            rendered.append(f"{'-' if num < 0 else '+'} {body}")
    joined = " ".join(rendered)
    return f"({joined})/{den}" if den != 1 else joined


def render_poly_latex(table: Optional[CoefficientTable]) -> str:
    """LaTeX polynomial in factored style: \\frac{1}{45}\\left(...\\right)."""
    if table is None:
        return "1"
    terms = _ordered_terms(table)
    if len(terms) == 1:
        J, c = terms[0]
        mono = _monomial_latex(J)
        sign = "-" if c < 0 else ""
        a = abs(c)
        if a == 1:
            return f"{sign}{mono}"
        if a.denominator == 1:
            return f"{sign}{a.numerator} {mono}"
        return f"{sign}\\frac{{{a.numerator}}}{{{a.denominator}}} {mono}"
    den = math.lcm(*(c.denominator for _, c in terms))
    rendered = []
    for i, (J, c) in enumerate(terms):
        num = c.numerator * (den // c.denominator)
        mono = _monomial_latex(J)
        body = mono if abs(num) == 1 else f"{abs(num)} {mono}"
        if i == 0:
            rendered.append(f"-{body}" if num < 0 else body)
        else:
            rendered.append(f"{'-' if num < 0 else '+'} {body}")
    joined = " ".join(rendered)
    if den == 1:
        return joined
    return f"\\frac{{1}}{{{den}}}\\left({joined}\\right)"


def render_poly_json(genus_name: str, k: int, table: Optional[CoefficientTable]) -> str:
    """One-line JSON polynomial; rationals as decimal strings."""
    if table is None:
        terms = [{"partition": [], "num": "1", "den": "1"}]
    else:
        terms = [
            {
                "partition": list(J.parts),
                "num": str(c.numerator),
                "den": str(c.denominator),
            }
            for J, c in _ordered_terms(table)
        ]
    return json.dumps({"genus": genus_name, "k": k, "terms": terms})


def table_rows(tables: Mapping[int, CoefficientTable]) -> list[dict]:
    """Flat row dicts for export, degree ascending, partitions in table order."""
    rows = []
    for k in sorted(tables):
        for J, c in _ordered_terms(tables[k]):
            rows.append(
                {
                    "k": k,
                    "partition": J,
                    "num": c.numerator,
                    "den": c.denominator,
                    "sign": 1 if c > 0 else (-1 if c < 0 else 0),
                    "r": len(J),
                }
            )
    return rows


def render_table_csv(tables: Mapping[int, CoefficientTable]) -> str:
    lines = [CSV_HEADER]
    for row in table_rows(tables):
        lines.append(
            f"{row['k']},{row['partition']},{row['num']},{row['den']},"
            f"{row['sign']},{row['r']}"
        )
    return "\n".join(lines) + "\n"


def render_table_json(genus_name: str, max_k: int, tables: Mapping[int, CoefficientTable]) -> str:
    rows = [
        {
            "k": row["k"],
            "partition": list(row["partition"].parts),
            "num": str(row["num"]),
            "den": str(row["den"]),
            "sign": row["sign"],
            "r": row["r"],
        }
        for row in table_rows(tables)
    ]
    doc = {"genus": genus_name, "max_k": max_k, "rows": rows}
    return json.dumps(doc, indent=1) + "\n"


def parse_table_json(text: str) -> dict[tuple[int, tuple[int, ...]], Fraction]:
    """Exact rationals back from a JSON table; key (k, partition parts)."""
    doc = json.loads(text)
    out = {}
    for row in doc["rows"]:
        key = (int(row["k"]), tuple(int(p) for p in row["partition"]))
        out[key] = Fraction(int(row["num"]), int(row["den"]))
    return out


def _series_fingerprint(genus: GenusSpec) -> list[dict[str, str]]:
    return [
        {"num": str(c.numerator), "den": str(c.denominator)}
        for c in genus.series.coefficients
    ]


def _partition_key(J: IntegerPartition) -> str:
    return str(J)


def _parse_partition_key(key: str) -> IntegerPartition:
    return IntegerPartition(int(x) for x in key.split("+"))


def write_cache(path: str, genus: GenusSpec, tables: Mapping[int, CoefficientTable]) -> None:
    """Write the versioned cache document, deterministically serialized."""
    doc = {
        "version": CACHE_VERSION,
        "genus": genus.name,
        "b_coeffs": _series_fingerprint(genus),
        "tables": {
            str(k): {
                _partition_key(J): {"num": str(c.numerator), "den": str(c.denominator)}
                for J, c in tables[k].items()
            }
            for k in sorted(tables)
        },
    }
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(doc, sort_keys=True, separators=(",", ":")))
        fh.write("\n")


def read_cache(path: str, genus: GenusSpec) -> dict[int, CoefficientTable]:
    """Cached tables still valid for this genus; {} when unusable.

    The stored characteristic-series coefficients are the guard against
    mixing genera: any disagreement on the shared prefix discards the
    cache, and a table of degree k is reused only when the stored series
    pins coefficients 0..k.  Corrupt files warn on stderr and recompute.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        return {}
    except (OSError, json.JSONDecodeError) as exc:
        print(f"warning: cache {path}: {exc}; recomputing", file=sys.stderr)
        return {}
    try:
        if doc["version"] != CACHE_VERSION or doc["genus"] != genus.name:
            return {}
        stored = [
            Fraction(int(e["num"]), int(e["den"])) for e in doc["b_coeffs"]
        ]
        current = list(genus.series.coefficients)
        shared = min(len(stored), len(current))
        if stored[:shared] != current[:shared]:
            return {}
        out: dict[int, CoefficientTable] = {}
        for key, entries in doc["tables"].items():
            k = int(key)
            if k >= shared:  # stored series does not pin b_k
                continue
            parsed = {
                _parse_partition_key(pk): Fraction(int(e["num"]), int(e["den"]))
                for pk, e in entries.items()
            }
            out[k] = CoefficientTable(k, parsed)
        return out
    except (KeyError, TypeError, ValueError) as exc:
        print(f"warning: cache {path}: malformed ({exc}); recomputing", file=sys.stderr)
        return {}


def tables_with_cache(
    genus: GenusSpec, max_k: int, cache_path: Optional[str]
) -> dict[int, CoefficientTable]:
    """Tables for 1..max_k, reusing and refreshing the cache when given."""
    cached = read_cache(cache_path, genus) if cache_path else {}
    tables = {}
    missing = False
    for k in range(1, max_k + 1):
        if k in cached:
            tables[k] = cached[k]
        else:
            tables[k] = coefficient_table(genus, k)
            missing = True
    if cache_path and (missing or not cached):
        merged = dict(cached)
        merged.update(tables)
        write_cache(cache_path, genus, merged)
    return tables
