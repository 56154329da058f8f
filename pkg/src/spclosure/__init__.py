"""Closure operations, their special parts, and instance checks for monomial and char-p ideals."""
