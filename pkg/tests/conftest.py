import pytest

from witt_uniq import designs, graphs, pipeline, reference, scheme, sphere

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def witt_instance():
    return designs.build_witt_instance()


@pytest.fixture(scope="session")
def witt_design():
    return designs.construct_witt_design()


@pytest.fixture(scope="session")
def witt_scheme(witt_design):
    return scheme.scheme_from_design(witt_design)


@pytest.fixture(scope="session")
def frame():
    return sphere.build_frame()


@pytest.fixture(scope="session")
def Y1(frame):
    return sphere.enumerate_Y1(frame)


@pytest.fixture(scope="session")
def fixed_c2(frame):
    return sphere.fix_C2(frame, reference.C_MATRIX)


@pytest.fixture(scope="session")
def cliques10(frame, Y1):
    return graphs.enumerate_cliques(sphere.y1_graph(frame, Y1), 10)


@pytest.fixture(scope="session")
def Z(frame, fixed_c2):
    return sphere.filter_Z(frame, sphere.enumerate_Y(frame, fixed_c2), fixed_c2)


@pytest.fixture(scope="session")
def z_split(frame, Z, fixed_c2):
    return sphere.split_Z(frame, Z, fixed_c2)


@pytest.fixture(scope="session")
def full_run():
    return pipeline.run_pipeline(pipeline.PipelineConfig(threads=1))


@pytest.fixture(scope="session")
def full_run_threaded():
    return pipeline.run_pipeline(pipeline.PipelineConfig(threads=2))
