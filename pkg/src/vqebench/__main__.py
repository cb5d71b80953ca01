from vqebench.bench.cli import main

raise SystemExit(main())
