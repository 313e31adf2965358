"""pytest wiring for vsc-install's CommonTest (test/00-import.py)."""
import os

# CommonTest derives the repository from sys.argv[0], which is the pytest executable here
os.environ.setdefault("REPO_BASE_DIR", os.path.dirname(os.path.abspath(__file__)))

# examples/ is a read-only reference pack, not part of the package (also --ignore'd by pytest)
from vsc.install.commontest import prospector_ignore_paths_add  # noqa: E402

prospector_ignore_paths_add("examples")
