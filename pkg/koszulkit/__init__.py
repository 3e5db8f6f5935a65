# Koszul duality toolkit package
__version__ = "1.0.0"
__author__ = "koszulkit Team"
