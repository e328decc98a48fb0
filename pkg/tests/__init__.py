"""
Test package for the special forms toolkit.

Running Tests:
    # Run all tests
    pytest

    # Include the slow tests (120x120 polynomials, 12-dimensional lifts)
    RUN_SLOW_TESTS=1 pytest

    # Run specific test file
    pytest tests/special_forms/test_symmetry.py

Test Structure:
    - special_forms/ - Unit tests for forms, symmetries, constructions,
      spectra, the verification harness and the CLI
"""
