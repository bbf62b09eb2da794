import doctest

import milnor


def test_package_docstring_example():
    result = doctest.testmod(milnor)
    assert result.attempted > 0 and result.failed == 0
