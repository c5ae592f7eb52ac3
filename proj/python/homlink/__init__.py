"""Exact homogeneous liaison: Groebner bases, colons, resolutions and links."""

from ._homlink import (
    Ideal,
    LinkError,
    ParseError,
    Ring,
    ScriptError,
    betti,
    betti_grid,
    chain_verify,
    construct_thm32,
    find_reg_seq,
    gb,
    height,
    hilbert,
    is_cohen_macaulay,
    krull_dim,
    link,
    mindeg,
    monomial_scan,
    parse,
    parse_ideal,
    quotient,
    regularity,
    run_cli,
)

__all__ = [
    "Ideal", "LinkError", "ParseError", "Ring", "ScriptError", "betti", "betti_grid", "chain_verify",
    "construct_thm32", "find_reg_seq", "gb", "height", "hilbert", "is_cohen_macaulay", "krull_dim", "link",
    "mindeg", "monomial_scan", "parse", "parse_ideal", "quotient", "regularity", "run_cli",
]
