import pytest
import subprocess
from pathlib import Path
from reflexive_minhom.available_commands import CommandStruct, get_available_commands
from reflexive_minhom.commands.classify.classify_command import ClassifyCommand
from reflexive_minhom.utils.configuration_loader import ConfigurationLoader, CommandNotFoundException, \
    IllFormedConfig
from tests.common_mocks.mock_command.mock_command import MockCommand
from tests.common_mocks.mock_command.mock_command_config import MockCommandConfig


class TestConfigurationLoader(object):

    @pytest.fixture
    def loader(self):
        return ConfigurationLoader(available_commands={"mock_command": CommandStruct(MockCommand,
                                                                                     MockCommandConfig)})

    def test_load_next_command_skips_existing_runs(self, loader, set_tmp_directory, cleanup_run, request):
        """
        If folders '0' and '2' exist, entry 1 runs next.
        """
        # Arrange
        base_directory = Path(request.node.run_output_dir, "commands")
        base_directory.joinpath("0").mkdir(parents=True)
        base_directory.joinpath("2").mkdir(parents=True)
        commands = [{"command": "mock_command", "test_param": str(index)} for index in range(3)]

        # Act
        command = loader.load_next_command_from_dicts(str(base_directory), commands)

        # Assert
        assert command.config.test_param == "1"
        assert command.config.output_dir == str(base_directory.joinpath("1"))
        assert commands[1] == {}, "The loaded entry should have been consumed"

    def test_all_runs_done_returns_none(self, loader, set_tmp_directory, cleanup_run, request):
        # Arrange
        base_directory = Path(request.node.run_output_dir, "commands")
        base_directory.joinpath("0").mkdir(parents=True)

        # Act
        command = loader.load_next_command_from_dicts(str(base_directory), [{"command": "mock_command"}])

        # Assert
        assert command is None

    def test_meta_data_is_logged(self, loader, set_tmp_directory, cleanup_run, request):
        # Act
        command = loader.load_command({"command": "mock_command"}, output_dir=request.node.run_output_dir,
                                      meta_data={"note": "hello"})

        # Assert
        run_logs = list(Path(command.config.output_dir).glob("run_*.json"))
        assert len(run_logs) == 1
        assert "hello" in run_logs[0].read_text()

    def test_unknown_command_raises(self, loader):
        with pytest.raises(CommandNotFoundException):
            loader.load_command({"command": "classify"})

    def test_missing_command_raises(self, loader):
        with pytest.raises(IllFormedConfig):
            loader.load_command({"test_param": "x"})

    def test_commit_hash_outside_git(self, monkeypatch):
        # Arrange
        def raise_called_process_error(*args, **kwargs):
            raise subprocess.CalledProcessError(128, "git")

        monkeypatch.setattr(subprocess, "check_output", raise_called_process_error)

        # Act & Assert
        assert ConfigurationLoader._get_script_dir_commit_hash() == "unknown"

    def test_registry_loads_real_commands(self):
        """
        The registry imports a command only when it is asked for.
        """
        # Arrange
        loader = ConfigurationLoader(available_commands=get_available_commands())

        # Act
        command = loader.load_command({"command": "classify", "path": "template.digraph"})

        # Assert
        assert isinstance(command, ClassifyCommand)
        assert command.config.path == "template.digraph"
        assert sorted(get_available_commands().keys()) == ["catalog", "classify", "crosscheck", "export-dot",
                                                          "ordering", "reduce", "solve", "verify-theorem"]
