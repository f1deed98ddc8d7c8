# conftest.py
# Keeps the repository root importable (`app`, `main`) when pytest runs from anywhere.
