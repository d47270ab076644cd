from unittest.mock import patch

from superorbit.timing import log_execution_time, log_time


def test_logs_rounded_execution_time_without_timing_in_message():
    with (
        patch("superorbit.timing.perf_counter", side_effect=[1.0, 1.123456]),
        patch("superorbit.timing.log.debug") as mock_debug,
    ):
        with log_execution_time("build gl(2|1)") as timer:
            pass

    mock_debug.assert_called_once_with(
        "build gl(2|1)",
        execution_time=0.1235,
        function_name="build gl(2|1)",
    )
    assert timer.elapsed == 0.1235


def test_log_time_uses_function_name():
    @log_time()
    def build_something():
        return 42

    with patch("superorbit.timing.log.debug") as mock_debug:
        assert build_something() == 42

    assert mock_debug.call_args.args == ("build_something",)
    assert mock_debug.call_args.kwargs["function_name"] == "build_something"
