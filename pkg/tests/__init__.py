"""
Test suite for qdeform

Covers the exact engine (scalars, data, rewriting, Hopf structure, deformations
and doubles), the job-file loader and the command line.
"""
