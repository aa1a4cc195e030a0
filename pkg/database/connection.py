# database/connection.py
from sqlalchemy import create_engine
from sqlalchemy.orm import declarative_base, scoped_session, sessionmaker

from core.config import GRID_DATABASE_URL
from core.logging_setup import logger

Base = declarative_base()

engine = None
SessionFactory = sessionmaker(autocommit=False, autoflush=False)
SessionLocal = scoped_session(SessionFactory)


def configure_engine(database_url=GRID_DATABASE_URL):
    """Binds the session factory to database_url. Grid runs call this once with --db."""
    global engine
    try:
        engine = create_engine(database_url, pool_pre_ping=True)
        SessionLocal.remove()
        SessionFactory.configure(bind=engine)
        logger.info(f"Grid database engine configured for {database_url}.")
        return engine
    except Exception as e:
        logger.critical(f"CRITICAL Failed to connect to database or setup SQLAlchemy: {e}", exc_info=True)
        raise


def init_db(database_url=None):
    """Initializes the database and creates tables if they don't exist."""
    if database_url is not None or engine is None:
        configure_engine(database_url or GRID_DATABASE_URL)
    try:
        logger.info("Initializing grid database and creating tables...")
        # Import models here to ensure they are registered with Base metadata
        from . import models  # noqa F401
        Base.metadata.create_all(bind=engine)
        logger.info("Database tables created successfully (if they didn't exist).")
    except Exception as e:
        logger.critical(f"CRITICAL Error initializing database: {e}", exc_info=True)
        raise
    return engine

