"""ssetkit: a workbench for finite simplicial sets and indexed type theory."""

__version__ = "0.1.0"
