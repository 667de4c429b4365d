def test_import():
    import pmp_py  # noqa: F401
