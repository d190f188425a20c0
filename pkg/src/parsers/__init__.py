"""Parsers"""
from .grid_parser import parse_grid
from .matrix_parser import parse_matrix, read_labels, read_matrix

__all__ = ["parse_grid", "parse_matrix", "read_labels", "read_matrix"]
