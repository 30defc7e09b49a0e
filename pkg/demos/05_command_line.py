# The command-line tool, driven in-process.
# %%
import io
import json

from affsemi.cli import CliConfig, main, run

main(["analyze", "--gens", "3,1;0,4;2,2", "--format", "text"])

# %%
batch = "3,1;0,4;2,2\n4,1;1,3;2,2\n1,1;3,3\n"
out = io.StringIO()
run(CliConfig(command="batch", input_path="-"), stdout=out, stdin=io.StringIO(batch))
for line in out.getvalue().splitlines():
    rec = json.loads(line)
    print(rec["error"] if "error" in rec else (rec["generators"], rec["multiplicity"]))

# %%
code = main(["check", "gr-gorenstein", "--gens", "0,2;2,1;0,3;1,2"])
print("exit code", code)
