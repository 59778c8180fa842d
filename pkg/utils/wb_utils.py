import wandb


def init_run(args, job_type):
    return wandb.init(group=args.group,
                      name=f'{args.name}_{job_type}',
                      job_type=job_type,
                      project=args.wb_project,
                      entity=args.wb_entity,
                      config=args,
                      settings=wandb.Settings(_disable_stats=True),
                      mode=args.wb_mode)


def log_check(name, checked, failures):
    wandb.log({f'{name}/checked': checked, f'{name}/failed': len(failures)})
    wandb.run.summary[f'{name}/failed'] = len(failures)
    if failures:
        table = wandb.Table(columns=['case'], data=[[str(case)] for case in failures[:50]])
        wandb.log({f'{name}/failures': table})
