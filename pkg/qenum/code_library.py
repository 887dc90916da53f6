"""
Named Code Library

Loads the code files shipped in the package's codes directory (config.CODES_DIR) and resolves
the CLI's --code argument, which may be a file path or a library name.

Key Features:
- File-based loading of *.code files, keyed by file stem
- Caching with file modification detection
- CodeSummary listing (n, g, K, self-orthogonality) for the CLI and the tool server
"""
from pathlib import Path
from typing import Dict, Optional

from mcp.server.fastmcp.utilities.logging import get_logger

from qenum import config
from qenum.errors import CodeParseError
from qenum.gf4_codes import AdditiveCode, load_code
from qenum.schemas import CodeSummary

logger = get_logger(__name__)

MODULE_DIR = Path(__file__).parent.resolve()

library: Dict[str, AdditiveCode] = {}
_library_timestamp: float = 0


def _codes_path(codes_dir_name: Optional[str] = None) -> Path:
    return MODULE_DIR / (codes_dir_name or config.CODES_DIR)


def load_library(codes_dir_name: Optional[str] = None) -> Dict[str, AdditiveCode]:
    """
    Load every *.code file of the library directory, reusing the cache while no file changed.

    Args:
        codes_dir_name: Directory of code files relative to the package; defaults to config.CODES_DIR.

    Returns:
        A dictionary mapping each file stem to its parsed AdditiveCode. Unparseable files are logged and skipped.
    """
    global _library_timestamp

    codes_path = _codes_path(codes_dir_name)
    if not codes_path.is_dir():
        logger.warning(f"Code library directory not found: {codes_path}. No codes loaded.")
        return {}

    files = sorted(codes_path.glob("*.code"))
    latest = max((file_path.stat().st_mtime for file_path in files), default=0.0)
    if library and _library_timestamp >= latest and set(library) == {file_path.stem for file_path in files}:
        logger.debug("Using cached code library")
        return dict(library)

    loaded: Dict[str, AdditiveCode] = {}
    for file_path in files:
        try:
            loaded[file_path.stem] = load_code(file_path)
            logger.debug(f"Loaded library code '{file_path.stem}' from {file_path}")
        except CodeParseError as e:
            logger.error(f"Invalid code file {file_path}: {e}")

    library.clear()
    library.update(loaded)
    _library_timestamp = latest
    logger.info(f"Code library loaded from {codes_path}: {len(loaded)} codes")
    return dict(loaded)


def clear_library_cache() -> None:
    global _library_timestamp
    library.clear()
    _library_timestamp = 0


def get_code(name: str) -> Optional[AdditiveCode]:
    """
    Look up a library code by name.

    Args:
        name: File stem of the code, e.g. "five_qubit".

    Returns:
        The AdditiveCode, or None if the library has no such code.
    """
    return load_library().get(name)


def resolve_code(reference: str) -> AdditiveCode:
    """
    Resolve a --code argument.

    Args:
        reference: A path to a code file, or the name of a library code.

    Returns:
        The parsed AdditiveCode.

    Raises:
        FileNotFoundError: If the reference is neither an existing file nor a library name.
        CodeParseError: If the file exists but is malformed.
    """
    path = Path(reference)
    if path.is_file():
        return load_code(path)
    code = get_code(reference)
    if code is None:
        raise FileNotFoundError(f"'{reference}' is neither a code file nor a library code ({', '.join(sorted(library))})")
    return code


def list_codes() -> list[CodeSummary]:
    """
    Summarize the library.

    Returns:
        One CodeSummary per library code, sorted by name.
    """
    summaries = []
    for name, code in sorted(load_library().items()):
        summaries.append(
            CodeSummary(
                name=name,
                n=code.n,
                g=code.g,
                K=str(2 ** (code.n - code.g)) if code.g <= code.n else f"1/{2 ** (code.g - code.n)}",
                self_orthogonal=code.is_self_orthogonal(),
            )
        )
    return summaries
