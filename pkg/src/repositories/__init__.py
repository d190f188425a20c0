"""Repositories"""
from .run_repository import RunRepository, load_json, to_jsonable

__all__ = ["RunRepository", "load_json", "to_jsonable"]
