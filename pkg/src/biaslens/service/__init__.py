from .store import ProjectStore, STAGES

__all__ = ["ProjectStore", "STAGES"]
