# Third Party
from invoke import task

TEST_SETTINGS = "DJANGO_SETTINGS_MODULE=config.settings.test"

# Test
# --------------------------------------------------------------------------------


@task
def test(c, path="twoqubit", slow=True, ipdb=False):
    """Run the test suite"""
    slow_switch = "" if slow else '-m "not slow"'
    ipdb_switch = "--pdb --pdbcls=IPython.terminal.debugger:Pdb" if ipdb else ""
    c.run(f"{TEST_SETTINGS} pytest {slow_switch} {ipdb_switch} {path}", pty=True)


@task
def coverage(c):
    """Run the test suite with coverage report"""
    c.run("coverage erase")
    c.run(f"{TEST_SETTINGS} coverage run -m pytest")
    c.run("coverage html")


# Code Quality
# --------------------------------------------------------------------------------


@task
def pylint(c):
    """Run the linter"""
    c.run("pylint twoqubit")


@task
def flake8(c):
    """Check code style"""
    c.run("flake8 twoqubit config")


@task
def format(c):
    """Format your code"""
    c.run("black twoqubit config tasks.py && isort twoqubit config tasks.py")


# Docs
# --------------------------------------------------------------------------------


@task
def docs(c):
    """Build the html documentation"""
    c.run("sphinx-build -b html docs docs/_build/html")


# Run
# --------------------------------------------------------------------------------


@task(aliases=["m"])
def manage(c, cmd):
    """Run a Django management command"""
    c.run(f"python manage.py {cmd}")


@task
def celeryworker(c):
    """Run a celery worker for the Monte Carlo tasks"""
    c.run(
        "CELERY_TASK_ALWAYS_EAGER=false celery -A twoqubit.taskapp worker -l info",
        pty=True,
    )


@task
def figures(c, output="data"):
    """Write the data behind every figure and table"""
    c.run(f"mkdir -p {output}")
    c.run(f"python manage.py table1 --output {output}/table1")
    c.run(f"python manage.py volumes --output {output}/volumes")
    for radius in ("0.6", "1.0", "1.4", "1.7320508075688772"):
        c.run(f"python manage.py histogram {radius} --output {output}/histogram_{radius[:3]}")
    c.run(f"python manage.py trajectory d3 --g 0.5 --gamma 1 --B0 1 --output {output}/d3_markovian")
    c.run(f"python manage.py trajectory d3 --g 0.5 --gamma 0.1 --B0 1 --output {output}/d3_rtn")
    c.run(f"python manage.py trajectory ye --a0 0.2 --output {output}/ye_approaching")
    c.run(f"python manage.py trajectory ye --a0 0.5 --output {output}/ye_entering")
    c.run(
        f"python manage.py trajectory zj --r 0.5 --g 0.1 --gamma 0.5 --B0 0.1 "
        f"--output {output}/zj_werner"
    )
    c.run(f"python manage.py critical ye a0 0 1 --output {output}/ye_critical")
    for cut in ("ye", "zj"):
        c.run(f"python manage.py subspace_section {cut} --samples 41 --output {output}/subspace_{cut}")
    for cut in ("ye-iz0", "ye-xx0", "zj-xy0"):
        c.run(f"python manage.py subspace_section {cut} --output {output}/subspace_{cut}")


# Dependency Management
# --------------------------------------------------------------------------------


@task(name="pip-compile")
def pip_compile(c, upgrade=False, package=None):
    """Run pip compile"""
    if package:
        upgrade_flag = f"--upgrade-package {package}"
    elif upgrade:
        upgrade_flag = "--upgrade"
    else:
        upgrade_flag = ""
    c.run(
        f"pip-compile {upgrade_flag} requirements/base.in && "
        f"pip-compile {upgrade_flag} requirements/local.in && "
        f"pip-compile {upgrade_flag} requirements/production.in"
    )
