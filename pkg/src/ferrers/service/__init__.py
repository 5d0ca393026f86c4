"""HTTP service wrapping the core operations.

`schemas` holds the pydantic request/response models (the JSON wire
format), `handlers` the pure request-to-response functions, and `app` the
FastAPI application routing to them.  The command line client drives the
same handlers in process.
"""

from .app import app

__all__ = ["app"]
