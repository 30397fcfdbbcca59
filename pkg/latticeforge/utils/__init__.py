from .text import cleanup_llm_output

__all__ = ["cleanup_llm_output"]
