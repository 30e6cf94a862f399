from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple


class ConditionId(str, Enum):
    FUNCTOR_AXIOM_1 = "functor_axiom_1"
    ASSOC_NAT_F = "assoc_nat_f"
    ASSOC_NAT_OBJ = "assoc_nat_obj"
    ASSOC_TRANSF = "assoc_transf"
    UNITOR_NAT_F_LEFT = "unitor_nat_f_left"
    UNITOR_NAT_F_RIGHT = "unitor_nat_f_right"
    UNITOR_TRANSF_LEFT = "unitor_transf_left"
    UNITOR_TRANSF_RIGHT = "unitor_transf_right"
    TENS_NAT_1 = "tens_nat_1"
    TENS_NAT_2 = "tens_nat_2"
    TENS_NAT_3 = "tens_nat_3"
    TENS_TRANSF = "tens_transf"
    MOD_LAMBDA = "mod_lambda"
    MOD_MU = "mod_mu"
    MOD_RHO = "mod_rho"
    MOD_PENT = "mod_pent"
    STASHEFF = "stasheff"
    UNIT_POLY_1 = "unit_poly_1"
    UNIT_POLY_2 = "unit_poly_2"
    COR_R_ID = "cor_r_id"
    COR_ALPHA_ID = "cor_alpha_id"

    def __str__(self) -> str:
        return self.value


PASS = "pass"
FAIL = "fail"


@dataclass(frozen=True)
class CheckReport:
    condition: str
    indices: Tuple[str, ...]
    status: str
    witness: Optional[Tuple[str, str]] = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def sortKey(self) -> Tuple[str, Tuple[str, ...]]:
        return (self.condition, self.indices)

    def toDict(self) -> dict:
        data = {"condition": self.condition, "indices": list(self.indices), "status": self.status}
        if self.witness is not None:
            data["witness"] = {"lhs": self.witness[0], "rhs": self.witness[1]}
        return data


def sortReports(reports: Iterable[CheckReport]) -> List[CheckReport]:
    return sorted(reports, key=CheckReport.sortKey)


@dataclass
class Summary:
    total: int = 0
    failed: int = 0
    perCondition: Dict[str, Tuple[int, int]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def line(self) -> str:
        return "PASS" if self.passed else f"FAIL {self.failed}"


def summarize(reports: Iterable[CheckReport]) -> Summary:
    summary = Summary()
    for report in reports:
        total, failed = summary.perCondition.get(report.condition, (0, 0))
        summary.perCondition[report.condition] = (total + 1, failed + (0 if report.passed else 1))
        summary.total += 1
        if not report.passed:
            summary.failed += 1
    return summary
