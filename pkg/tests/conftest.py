import os
import sys

try:
    import soclekit  # noqa: F401
except ImportError:
    sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hypothesis import settings

settings.register_profile("soclekit", deadline=None, max_examples=60)
settings.load_profile("soclekit")
