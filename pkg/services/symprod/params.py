# services/symprod/params.py
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from core.errors import InvalidParamsError
from .nagata import NagataValue, lookup_t


def gonality(g):
    """Gonality of a very general curve of genus g."""
    if g == 0:
        return 1
    if g == 1:
        return 2
    return (g + 3) // 2


def mu0(m, g):
    """(m+g-1)/(mg), the L_0 coefficient of -Delta_m/2 in the (theta, L_0) frame."""
    return Fraction(m + g - 1, m * g)


@dataclass(frozen=True)
class CurveParams:
    g: int
    d: int
    n: Optional[int] = None
    very_general: bool = True
    t: Optional[NagataValue] = None
    splitting: Optional[tuple] = None

    def __post_init__(self):
        if self.g < 0:
            raise InvalidParamsError(f"Genus must be >= 0, got {self.g}.")
        if self.d < 1:
            raise InvalidParamsError(f"Quotient length d must be >= 1, got {self.d}.")
        if self.n is not None and self.n < 1:
            raise InvalidParamsError(f"Bundle rank n must be >= 1, got {self.n}.")
        if self.g >= 2 and not self.very_general:
            raise InvalidParamsError("Curves of genus >= 2 must be very general.")
        if self.splitting is not None:
            if self.g != 0:
                raise InvalidParamsError("A splitting type is only meaningful in genus 0.")
            if not self.splitting:
                raise InvalidParamsError("Splitting type must be nonempty.")
            object.__setattr__(self, "splitting", tuple(sorted(int(a) for a in self.splitting)))

    @property
    def gonality(self):
        return gonality(self.g)

    @property
    def mu0(self):
        if self.g == 0:
            raise InvalidParamsError("mu_0 is undefined in genus 0.")
        return mu0(self.d, self.g)

    def mu0_at(self, m):
        return mu0(m, self.g)

    @property
    def sym_rank(self):
        """Dimension of N^1(C^(d)): the degree line for d = 1 or g = 0, else 2."""
        return 1 if self.d == 1 or self.g == 0 else 2

    @property
    def quot_dim(self):
        return self.sym_rank + 1

    @property
    def rank(self):
        """Rank of the bundle E, from n or from the splitting type."""
        if self.splitting is not None:
            return len(self.splitting)
        return self.n

    def with_length(self, m):
        return replace(self, d=m)

    def as_dict(self):
        payload = {"g": self.g, "d": self.d, "n": self.rank, "very_general": self.very_general,
                   "gonality": self.gonality}
        if self.t is not None:
            payload["t"] = self.t.as_dict()
        if self.splitting is not None:
            payload["splitting"] = list(self.splitting)
        return payload


def build_params(g, d, n=None, splitting=None, t_overrides=None, allow_conjectural_t=False, very_general=True):
    """CurveParams with t resolved from the built-in table and any configured overrides."""
    if g == 0 and splitting is None and n is not None:
        splitting = (0,) * n
    t = lookup_t(g, overrides=t_overrides, allow_conjectural=allow_conjectural_t) if g >= 1 else None
    return CurveParams(g=g, d=d, n=n if splitting is None else len(splitting), very_general=very_general,
                       t=t, splitting=splitting)
