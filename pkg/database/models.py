# database/models.py
from datetime import datetime, timezone

from sqlalchemy import Boolean, Column, DateTime, Integer, JSON, String, Text, UniqueConstraint

from .connection import Base


class GridReport(Base):
    __tablename__ = "grid_reports"
    id = Column(Integer, primary_key=True, index=True)
    g = Column(Integer, nullable=False, index=True)
    d = Column(Integer, nullable=False, index=True)
    n = Column(Integer, nullable=True)
    splitting = Column(String, nullable=False, default="")  # comma-joined a_i, empty off genus 0

    has_exact = Column(Boolean, nullable=False, default=False)
    theorem = Column(Text, nullable=True)
    flags = Column(JSON, nullable=True)
    report_json = Column(Text, nullable=False)
    format_version = Column(String, nullable=False)

    created_at = Column(DateTime(timezone=True),
                        default=lambda: datetime.now(timezone.utc),
                        onupdate=lambda: datetime.now(timezone.utc))

    __table_args__ = (UniqueConstraint("g", "d", "n", "splitting", name="uq_grid_cell"),)

    def __repr__(self):
        return f"<GridReport(g={self.g}, d={self.d}, n={self.n}, splitting='{self.splitting}', exact={self.has_exact})>"
