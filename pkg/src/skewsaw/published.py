"""Best-known skew-symmetric sequences shipped with the package.

Seventeen published best-known results for odd lengths up to 247, each with
its claimed energy, merit factor (4 printed decimals), and the claimed
probability (percent) that the sequence is optimal under the exponential
stopping model.  `skewsaw verify --builtin` recomputes every row from the hex
code alone.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["KnownResult", "BEST_KNOWN"]


@dataclass(frozen=True)
class KnownResult:
    L: int
    E: int
    F: float
    optimal_prob_pct: int
    hex: str


BEST_KNOWN: tuple[KnownResult, ...] = (
    KnownResult(171, 1669, 8.7600, 99, "0x07F018C27F3C01849035B3"),
    KnownResult(185, 1932, 8.8574, 99, "0x0119ED2F78CF6800A4DE0623"),
    KnownResult(193, 2040, 9.1296, 99, "0x020C18D1A749035A04EFECC5A"),
    KnownResult(197, 2162, 8.9752, 99, "0x11556D25B59128BF09CDD2641"),
    KnownResult(199, 2187, 9.0537, 99, "0x0B09049607E02FB345D6C88E7"),
    KnownResult(219, 2605, 9.2056, 99, "0x0F1B163E62ACAA8F7814BF89231D"),
    KnownResult(223, 2727, 9.1179, 99, "0x03DC43EE6531A21CD95E148C084A"),
    KnownResult(225, 2768, 9.1447, 98, "0x06AF8A172B0EB88ADF54E5A74C629"),
    KnownResult(229, 2810, 9.3311, 87, "0x0F81FF03DFF1E7BCE6CB9B1517328"),
    KnownResult(231, 2963, 9.0046, 78, "0x0240D99121A078037EFF306D34A2D"),
    KnownResult(235, 2965, 9.3128, 57, "0x2D663B94D7EBFBD5B4884CA45ED23C"),
    KnownResult(237, 3118, 9.0072, 46, "0x6D663B94D7EBFBD5B4884CA45ED23C"),
    KnownResult(239, 3055, 9.3488, 37, "0xB64DB6017C0BAB48183C45C48C1A76"),
    KnownResult(241, 3216, 9.0300, 29, "0x0B64DB6017C0BAB48183C45C48C1A76"),
    KnownResult(243, 3233, 9.1322, 23, "0x2E7FC23843DADB804E1B3771FBE57E3"),
    KnownResult(245, 3226, 9.3033, 17, "0x1C38F1EFD72180453AC7548DCFC5F19"),
    KnownResult(247, 3259, 9.3601, 13, "0x3FF9FE03FE31FDEC1870F23887276E5"),
)
