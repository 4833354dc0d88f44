import pytest

from hychroma.partitions import z4_coset_partition, z4_punctured_partition
from hychroma.z4 import kerdock_code, preparata_code


@pytest.fixture(scope="session")
def preparata3():
    return preparata_code(3)


@pytest.fixture(scope="session")
def kerdock5():
    return kerdock_code(5)


@pytest.fixture(scope="session")
def preparata3_partition(preparata3):
    return z4_coset_partition(preparata3)


@pytest.fixture(scope="session")
def preparata3_punctured(preparata3):
    return z4_punctured_partition(preparata3)
