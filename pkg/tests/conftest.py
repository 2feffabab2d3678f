"""Prints one PASS/FAIL line per acceptance criterion at the end of the run."""

_results: dict = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    entry = _results.setdefault(props["criterion"], {"title": props.get("title", ""), "failed": []})
    if report.failed:
        entry["failed"].append(report.nodeid.split("::")[-1])


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        entry = _results[n]
        status = "FAIL" if entry["failed"] else "PASS"
        line = f"criterion {n}: {status}  {entry['title']}"
        if entry["failed"]:
            line += f"  [failing: {', '.join(entry['failed'])}]"
        terminalreporter.write_line(line)
