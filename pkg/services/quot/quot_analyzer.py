# services/quot/quot_analyzer.py
from core.config import Settings
from core.errors import HypothesisError, InvalidParamsError, NoUpperBoundError
from core.logging_setup import logger
from services.symprod import build_params, nef_cone_sym
from .boundary import boundary_certificates
from .bounds import lower_bound_cone, upper_bound
from .picture import picture_points
from .theorems import exact_cone

FLAG_NO_UPPER_BOUND = "no-upper-bound"
FLAG_T_UNKNOWN = "t-unknown"
FLAG_CONJECTURAL_T_REFUSED = "conjectural-t-refused"

# Flags meaning a theorem's hypotheses could not be met; the CLI exits with status 2 on them.
HYPOTHESIS_FLAGS = frozenset({FLAG_NO_UPPER_BOUND, FLAG_T_UNKNOWN, FLAG_CONJECTURAL_T_REFUSED})

COORDINATE_FRAME_POSITIVE_GENUS = ["O_Q(1)", "[x]", "[theta_d]"]
COORDINATE_FRAME_DEGREE_LINE = ["O_Q(1)", "[x]"]
COORDINATE_FRAME_GENUS0 = ["O_Q(1)", "H"]


class QuotAnalyzer:
    """Builds the full report for one (g, d, n) cell, or (splitting, d) in genus 0."""

    def __init__(self, g, d, n=None, splitting=None, settings=None):
        self.settings = settings or Settings()
        self.params = build_params(
            g, d, n=n, splitting=splitting,
            t_overrides=self.settings.t_overrides,
            allow_conjectural_t=self.settings.allow_conjectural_t,
        )
        if self.params.g >= 1 and self.params.rank is None:
            raise InvalidParamsError("Positive genus needs the bundle rank n.")
        self.flags = []
        self._cache = {}

    def _flag(self, flag):
        if flag not in self.flags:
            self.flags.append(flag)

    def _coordinates(self):
        if self.params.g == 0:
            return COORDINATE_FRAME_GENUS0
        if self.params.sym_rank == 1:
            return COORDINATE_FRAME_DEGREE_LINE
        return COORDINATE_FRAME_POSITIVE_GENUS

    def _resolve_exact(self):
        params = self.params
        try:
            exact = exact_cone(params, allow_conjectural_t=self.settings.allow_conjectural_t)
        except HypothesisError as e:
            logger.warning(f"Exact cone refused for g={params.g}, d={params.d}: {e}")
            self._flag(FLAG_CONJECTURAL_T_REFUSED)
            return None
        if exact is None and params.d == 2 and params.g >= 2 and params.t is None:
            logger.info(f"No value of t for g={params.g}; Nef(Q(n,2)) stays open.")
            self._flag(FLAG_T_UNKNOWN)
        if exact is not None:
            for flag in exact.flags:
                self._flag(flag)
        self._cache["exact"] = exact
        return exact

    def _resolve_bounds(self, exact):
        params = self.params
        if params.g == 0:
            # The genus-0 cone is exact, so both bounds coincide with it.
            return exact.cone, exact.cone
        try:
            upper = upper_bound(params)
            for flag in upper.flags:
                self._flag(flag)
            upper_cone = upper.cone
        except NoUpperBoundError as e:
            logger.warning(f"No upper bound for g={params.g}, d={params.d}, n={params.rank}: {e}")
            self._flag(FLAG_NO_UPPER_BOUND)
            upper_cone = None
        return upper_cone, lower_bound_cone(params)

    def _resolve_picture(self):
        params = self.params
        if params.g < 1 or params.d < 2:
            return None
        picture = picture_points(params)
        for flag in picture.flags:
            self._flag(flag)
        self._cache["picture"] = picture
        return picture

    def _sym_summary(self):
        params = self.params
        if params.g == 0:
            return None
        sym = nef_cone_sym(params)
        return {"lower": sym.lower.as_dict(), "upper": sym.upper.as_dict(), "exact": sym.exact, "source": sym.source}

    def analyze(self):
        params = self.params
        logger.info(f"Analyzing Nef(Q) for g={params.g}, d={params.d}, n={params.rank}.")

        exact = self._resolve_exact()
        upper, lower = self._resolve_bounds(exact)
        boundary = boundary_certificates(params, allow_conjectural_t=self.settings.allow_conjectural_t)
        picture = self._resolve_picture()

        report = {
            "params": params.as_dict(),
            "coordinates": self._coordinates(),
            "sym": self._sym_summary(),
            "upper": upper.as_dict() if upper is not None else None,
            "lower": lower.as_dict() if lower is not None else None,
            "exact": exact.cone.as_dict() if exact is not None else None,
            "theorem": exact.theorem if exact is not None else None,
            "conditional": exact.conditional if exact is not None else False,
            "boundary": [cert.as_dict() for cert in boundary],
            "picture": picture.as_dict() if picture is not None else None,
            "flags": sorted(self.flags),
        }
        self._cache["report"] = report
        logger.info(f"Report for g={params.g}, d={params.d}, n={params.rank} done; flags={report['flags']}.")
        return report

    @property
    def picture(self):
        if "picture" not in self._cache:
            self._resolve_picture()
        return self._cache.get("picture")

    @staticmethod
    def needs_attention(report):
        return bool(HYPOTHESIS_FLAGS.intersection(report.get("flags", [])))
