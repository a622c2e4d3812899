"""HTTP service layer: pydantic schemas, shared operations, FastAPI app."""
