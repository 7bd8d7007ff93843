"""Planar mapping class monoid toolkit.

Verification and discovery of relations among products of positive Dehn
twists over convex curves in a disk with marked points (equivalently, the
holed sphere), via braid normal forms and the Lawrence-Krammer
representation.

Submodules: braid, surface, designs, plumbing, catalog, cli.
"""

__version__ = "0.1.0"
