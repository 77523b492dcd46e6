import nox

PYTHON_VERSIONS = ["3.9", "3.10"]
PACKAGE = "interlacepy"

nox.options.reuse_existing_virtualenvs = True


@nox.session(python="3.9")
def lint(session):
    session.run("poetry", "install", "-q", external=True)

    session.run("flake8", "src", "tests")
    session.run("mypy", "src", "tests")


@nox.session(python=PYTHON_VERSIONS)
def pytest(session):
    session.run("poetry", "install", "-q", external=True)

    session.run("pip", "check")
    session.run("pytest", "-q", f"--cov={PACKAGE}")


@nox.session(python="3.9")
def typeguard(session):
    session.run("poetry", "install", "-q", external=True)
    session.install("typeguard")

    session.run("pytest", f"--typeguard-packages={PACKAGE}")
