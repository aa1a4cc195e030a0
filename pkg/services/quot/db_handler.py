# services/quot/db_handler.py
from sqlalchemy.exc import SQLAlchemyError

from core.config import RENDER_FORMAT_VERSION
from core.logging_setup import logger
from database import GridReport
from services.rendering.report_formatter import report_to_json


def _cell_key(report):
    params = report["params"]
    splitting = ",".join(str(a) for a in params.get("splitting", []))
    return params["g"], params["d"], params.get("n"), splitting


def store_report(db_session, report):
    """Gets or creates the GridReport row for the report's cell and overwrites it."""
    g, d, n, splitting = _cell_key(report)
    entry = db_session.query(GridReport).filter(
        GridReport.g == g, GridReport.d == d, GridReport.n == n, GridReport.splitting == splitting
    ).first()

    if not entry:
        logger.debug(f"Grid cell g={g}, d={d}, n={n} not in DB, creating new entry.")
        entry = GridReport(g=g, d=d, n=n, splitting=splitting)
        db_session.add(entry)

    entry.has_exact = report.get("exact") is not None
    entry.theorem = report.get("theorem")
    entry.flags = list(report.get("flags", []))
    entry.report_json = report_to_json(report)
    entry.format_version = RENDER_FORMAT_VERSION

    try:
        db_session.commit()
        db_session.refresh(entry)
        logger.info(f"Stored grid report for g={g}, d={d}, n={n} (ID: {entry.id}).")
        return entry
    except SQLAlchemyError as e:
        db_session.rollback()
        logger.error(f"Error storing grid report for g={g}, d={d}, n={n}: {e}", exc_info=True)
        return None


def load_report(db_session, g, d, n=None, splitting=""):
    return db_session.query(GridReport).filter(
        GridReport.g == g, GridReport.d == d, GridReport.n == n, GridReport.splitting == splitting
    ).first()
