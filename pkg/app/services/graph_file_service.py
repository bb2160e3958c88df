"""
Graph File Service - read and write graph files
"""
from pathlib import Path
from typing import Optional

import structlog

from app.config import get_settings
from app.exceptions import InputError
from app.models.coxeter_matrix import CoxeterMatrix
from app.schemas import GraphFile

logger = structlog.get_logger(__name__)


class GraphFileService:
    """Service for graph files; bare names resolve against the shipped corpus"""

    def __init__(self, graphs_path: Optional[str] = None):
        self.graphs_path = Path(graphs_path or get_settings().graphs_path)

    def resolve(self, name: str) -> Path:
        path = Path(name)
        if path.is_file():
            return path
        candidate = self.graphs_path / (name if name.endswith(".json") else f"{name}.json")
        if candidate.is_file():
            return candidate
        shipped = ", ".join(self.corpus()) or "none"
        raise InputError(f"Graph file {name!r} not found (shipped graphs: {shipped})")

    def load(self, name: str) -> GraphFile:
        """Parse and validate; raises pydantic.ValidationError with line/field details"""
        path = self.resolve(name)
        try:
            text = path.read_text(encoding="utf-8")
        except UnicodeDecodeError as exc:
            raise InputError(f"Graph file {str(path)!r} is not UTF-8 text (byte {exc.start})") from exc
        graph = GraphFile.model_validate_json(text)
        logger.debug("graph_loaded", path=str(path), nodes=len(graph.nodes), edges=len(graph.edges))
        return graph

    def load_matrix(self, name: str) -> CoxeterMatrix:
        return self.load(name).to_matrix()

    def corpus(self) -> list[str]:
        """Names of the graphs shipped in graphs_path"""
        if not self.graphs_path.is_dir():
            return []
        return sorted(p.stem for p in self.graphs_path.glob("*.json"))
