from enum import StrEnum
from fractions import Fraction


class Comparator(StrEnum):
    GT = ">"
    LT = "<"
    LE = "<="
    GE = ">="

    def holds(self, lhs: Fraction | int, rhs: Fraction | int) -> bool:
        match self:
            case Comparator.GT:
                return lhs > rhs
            case Comparator.LT:
                return lhs < rhs
            case Comparator.LE:
                return lhs <= rhs
            case Comparator.GE:
                return lhs >= rhs
