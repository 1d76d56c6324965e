from pathlib import Path

import pytest

from moyweb.web_diagram import parse

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def corpus_files(pattern="**/*.web"):
    return sorted(CORPUS.glob(pattern))


def load(path):
    return parse(Path(path).read_text())


def closed_corpus():
    return [(p.relative_to(CORPUS).as_posix(), w) for p in corpus_files()
            for w in [load(p)] if w.is_closed]


@pytest.fixture(scope="session")
def closed_webs():
    return closed_corpus()


# acceptance results, printed once at the end of the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
