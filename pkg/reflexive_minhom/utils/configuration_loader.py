import os
import subprocess
import copy
import json
import datetime


class CommandNotFoundException(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class IllFormedConfig(Exception):
    def __init__(self, error_msg):
        super().__init__(error_msg)


class ConfigurationLoader(object):
    """
    Loads a configuration from a raw dictionary into the appropriate command and its config object.
    When an output directory is in use, also sets up the run directory the command will write into.
    """

    def __init__(self, available_commands):
        self._available_commands = available_commands

    def _get_command_from_raw_config(self, raw_config, run_output_dir):
        """
        The "command" entry tells us which config class should consume the rest of the dictionary.
        """
        command_id = raw_config.pop("command", None)

        if command_id is None:
            raise IllFormedConfig("Every configuration entry needs a \"command\".")

        if command_id not in self._available_commands:
            raise CommandNotFoundException(f"Command {command_id} not found in available commands.")

        command_class = self._available_commands[command_id].command
        command_config_class = self._available_commands[command_id].config
        command_config = command_config_class().load_from_dict(raw_config)

        if run_output_dir is not None:
            command_config.set_output_dir(run_output_dir)

        return command_class(command_config)

    @classmethod
    def _get_script_dir_commit_hash(cls):
        """
        Gets the commit hash of the repository this file lives in, "unknown" outside of a git checkout.
        """
        script_dir = os.path.dirname(os.path.realpath(__file__))

        try:
            commit = subprocess.check_output(["git", "describe", "--always"], cwd=script_dir,
                                             stderr=subprocess.DEVNULL).strip().decode()
        except (OSError, subprocess.CalledProcessError):
            commit = "unknown"

        return commit

    @classmethod
    def _write_json_log_file(cls, command_json, output_path, meta_data):
        command_json = copy.deepcopy(command_json)
        command_json["reflexive_minhom_commit"] = cls._get_script_dir_commit_hash()
        command_json["timestamp"] = str(datetime.datetime.now(datetime.timezone.utc))

        if meta_data is not None:
            command_json["meta_data"] = str(meta_data)

        # Colons are disallowed in Windows file names
        file_stamp = command_json["timestamp"].replace(":", ".").replace(" ", "_")
        output_file_path = os.path.join(output_path, f"run_{file_stamp}.json")

        with open(output_file_path, "w") as output_file:
            output_file.write(json.dumps(command_json))

    def load_next_command_from_config(self, output_dir, config_path, meta_data=None, resume_id=None):
        """
        Reads the list of command dictionaries from the JSON file at config_path and loads the next entry to run,
        in output_dir/<config file name>/<entry index>. Returns None if there is nothing further to load.

        Raises json.JSONDecodeError if the file is not valid JSON; may also raise IllFormedConfig and
        CommandNotFoundException.
        """
        json_config_name = os.path.basename(os.path.splitext(config_path)[0])
        output_directory = os.path.join(output_dir, json_config_name)

        with open(config_path) as json_file:
            commands = json.loads(json_file.read())

        return self.load_next_command_from_dicts(output_directory, commands, meta_data=meta_data,
                                                 resume_id=resume_id)

    def load_next_command_from_dicts(self, base_directory, commands, meta_data=None, resume_id=None):
        """
        Given a list of command dictionaries, load the first one without a numbered sub-directory of base_directory
        (or the one at resume_id), creating that directory and its run log.

        May raise IllFormedConfig and CommandNotFoundException.
        """
        if not isinstance(commands, list):
            raise IllFormedConfig("Configuration is expected to be a list of dictionaries. "
                                  "The object found is not a list.")

        if os.path.exists(base_directory):
            existing_runs = os.listdir(base_directory)
        else:
            existing_runs = []
        next_command_id = resume_id

        # If folders '0' and '2' exist, run '1' now
        if next_command_id is None:
            for command_id in range(len(commands)):
                if not str(command_id) in existing_runs:
                    next_command_id = command_id
                    break

        if next_command_id is None:
            return None

        command_json = commands[next_command_id]
        if not isinstance(command_json, dict):
            raise IllFormedConfig("The configuration for a command should be a dictionary.")

        # The command pops its entries off, so keep the original for the run log
        command_json_clone = copy.deepcopy(command_json)
        run_output_dir = os.path.join(base_directory, str(next_command_id))
        command = self._get_command_from_raw_config(command_json, run_output_dir)

        os.makedirs(run_output_dir, exist_ok=True)  # May exist if we're resuming
        self._write_json_log_file(command_json_clone, run_output_dir, meta_data)

        return command

    def load_command(self, raw_config, output_dir=None, meta_data=None):
        """
        A single command from the command line. Only when output_dir is given does it get a run directory, named
        <command>_<timestamp> inside output_dir.
        """
        raw_config_clone = copy.deepcopy(raw_config)
        run_output_dir = None

        if output_dir is not None:
            # Colons are disallowed in Windows, so format as 'Jul_14_2020_06.27.22.741813'
            timestamp = datetime.datetime.now().strftime("%b_%d_%Y_%H.%M.%S.%f")
            run_output_dir = os.path.join(output_dir, f"{raw_config.get('command')}_{timestamp}")

        command = self._get_command_from_raw_config(raw_config, run_output_dir)

        if run_output_dir is not None:
            os.makedirs(run_output_dir, exist_ok=True)
            self._write_json_log_file(raw_config_clone, run_output_dir, meta_data)

        return command
