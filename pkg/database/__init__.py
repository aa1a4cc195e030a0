from .connection import Base, SessionLocal, configure_engine, init_db
from .models import GridReport

__all__ = [
    "Base", "SessionLocal", "configure_engine", "init_db",
    "GridReport",
]
