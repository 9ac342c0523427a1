"""Per-case logging and the final report for AuditRunner."""

from .audit import AuditStatus, detect_findings
from .utils import get_memory_usage


def process_results(runner):
    """Feed finished cases to the statistics and the event log."""
    for case in runner.result.cases:
        runner.stats.record_case(case.suite, case.status.value, case.duration_ms)

        event_data = {
            'suite': case.suite,
            'seq': case.seq,
            'identity': case.identity,
            'label': case.label,
            'status': case.status.value,
            'duration_ms': case.duration_ms,
        }

        if case.status is AuditStatus.FAIL:
            runner.logger.log_alert(f"QGEN FAIL  | {case.suite} #{case.seq} {case.identity} {case.label} "
                                    f"| residual {case.residual}")
        elif case.status is AuditStatus.ERRATUM_EXPECTED and not runner.stats_only:
            runner.logger.log_alert(f"QGEN ERRATUM | {case.suite} #{case.seq} {case.identity} {case.label} "
                                    f"| residual {case.residual}")

        if not runner.stats_only:
            runner.logger.log_event(event_data)


def generate_final_output(runner):
    """Summary counts, timings, memory, findings and recommendations."""
    logger = runner.logger
    if runner.json_output:
        return

    summary = runner.stats.get_summary_stats()
    logger._log_message("\n=== AUDIT SUMMARY ===")
    logger._log_message(f"Suites: {', '.join(runner.suites)}")
    logger._log_message(f"Total cases: {summary['total_cases']}")
    for status in AuditStatus:
        logger._log_message(f"  {status.value}: {summary['cases_by_status'].get(status.value, 0)}")

    if summary['total_cases'] > 0:
        logger._log_message(f"Total case time: {logger._format_duration(summary['total_case_time'])}")
        logger._log_message(f"Average case time: {logger._format_duration(summary['average_duration'])}")
        logger._log_message(f"Slowest case: {logger._format_duration(summary['max_duration'])}")
    logger._log_message(f"Wall time: {logger._format_duration(runner.stats.wall_time_s * 1000.0)}")

    rss = get_memory_usage()
    if rss:
        logger._log_message(f"Resident memory: {rss / 1024 / 1024:.1f}MB")

    logger._log_message("\nCases by suite:")
    for suite, counts in summary['cases_by_suite'].items():
        parts = ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))
        logger._log_message(f"  {suite}: {parts}")

    findings, recommendations = detect_findings(runner.result.cases)
    if findings:
        logger._log_message("\n=== FINDINGS ===")
        for finding in findings:
            logger._log_message(f"[{finding['severity'].upper()}] {finding['type'].replace('_', ' ').title()}")
            logger._log_message(f"  Metric: {finding['metric']}")
            logger._log_message(f"  Impact: {finding['impact']}")

    recommendations = recommendations + runner.stats.generate_timing_recommendations(runner.workers)
    if recommendations:
        logger._log_message("\n=== RECOMMENDATIONS ===")
        for rec in recommendations:
            logger._log_message(f"- {rec}")
