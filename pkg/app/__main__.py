"""``python -m app`` runs the ei command line."""
import sys

from app.main import main

sys.exit(main())
