from app.commands.basins import basins_command
from app.commands.bench import bench_command
from app.commands.problems import problems_command
from app.commands.solve import solve_command
from app.commands.weights import weights_command

__all__ = ["basins_command", "bench_command", "problems_command", "solve_command", "weights_command"]
